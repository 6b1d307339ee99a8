#include "poincare/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "poincare/error.hpp"

namespace poincare {

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

std::string format_monomial(const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (e[i] > 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

bool local_order_less(const Exponents& a, const Exponents& b) {
  const unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(std::size_t vars) : vars_(vars) {}

void Polynomial::add_term(const Exponents& e, const Integer& c) {
  if (e.size() != vars_) throw InputError("monomial has the wrong number of variables");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

unsigned Polynomial::order() const {
  unsigned d = ~0u;
  for (const auto& [e, c] : terms_) d = std::min(d, total_degree(e));
  return terms_.empty() ? 0 : d;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exponents, Integer>*> sorted;
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(), [](auto a, auto b) { return local_order_less(a->first, b->first); });
  std::string out;
  for (const auto* t : sorted) {
    const Integer& c = t->second;
    const bool constant = total_degree(t->first) == 0;
    if (c.sign() < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const Integer mag = c.abs();
    if (constant) {
      out += mag.to_string();
    } else {
      if (!mag.is_one()) out += mag.to_string() + '*';
      out += format_monomial(t->first);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t vars) : vars_(vars) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }
  }

  Polynomial run() {
    Polynomial p(vars_);
    if (s_.empty()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      term(p, sign);
    }
    return p;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    return d;
  }

  void term(Polynomial& p, int sign) {
    Integer coeff = sign;
    Exponents e(vars_, 0);
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff *= Integer::parse(digits());
      have_factor = true;
      if (peek() == '*') {
        get();
      } else {
        p.add_term(e, coeff);
        return;
      }
    }
    while (true) {
      if (peek() != 'x') fail(have_factor ? "expected a power xK^E" : "expected a term");
      get();
      const std::string k = digits();
      if (k.empty()) fail("missing variable index");
      const auto idx = std::stoul(k);
      if (idx < 1 || idx > vars_) fail("variable x" + k + " out of range 1.." + std::to_string(vars_));
      unsigned long power = 1;
      if (peek() == '^') {
        get();
        const std::string ex = digits();
        if (ex.empty()) fail("missing exponent");
        power = std::stoul(ex);
        if (power < 1 || power > 1000) fail("exponent out of range");
      }
      e[idx - 1] = static_cast<std::uint16_t>(e[idx - 1] + power);
      have_factor = true;
      if (peek() != '*') break;
      get();
    }
    p.add_term(e, coeff);
  }

  std::string s_;
  std::size_t pos_ = 0;
  std::size_t vars_;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, std::size_t vars) { return Parser(text, vars).run(); }

}  // namespace poincare
