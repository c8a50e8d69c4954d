#include "unitcycle/cycle_poly.hpp"

#include <json.hpp>

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace unitcycle {

namespace {

std::string rational_string(const Rational& c) {
  std::string s = c.get_num().get_str();
  if (c.get_den() != 1) s += "/" + c.get_den().get_str();
  return s;
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0)
    throw std::invalid_argument("malformed rational \"" + s + "\"");
  r.canonicalize();
  return r;
}

u64 parse_index(const std::string& s) {
  if (s.empty() || s.size() > 19 || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("malformed variable index \"" + s + "\"");
  return std::stoull(s);
}

void render_plain_monomial(std::ostream& os, const CycleType& ct) {
  bool first = true;
  for (const auto& [i, e] : ct.exponents()) {
    if (!first) os << ' ';
    first = false;
    os << 'x' << i;
    if (e != 1) os << '^' << e;
  }
}

void render_latex_monomial(std::ostream& os, const CycleType& ct) {
  for (const auto& [i, e] : ct.exponents()) {
    os << "x_{" << i << '}';
    if (e != 1) os << "^{" << e << '}';
  }
}

std::string render_plain(const CycleIndexPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ct, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    if (ct.empty()) {
      os << rational_string(mag);
      continue;
    }
    if (mag != 1) os << rational_string(mag) << ' ';
    render_plain_monomial(os, ct);
  }
  return os.str();
}

// Common denominator pulled out front: \frac{1}{D}\left(...\right) with
// integer coefficients inside.
std::string render_latex(const CycleIndexPoly& p) {
  if (p.is_zero()) return "0";
  Integer den = 1;
  for (const auto& [ct, c] : p.terms()) den = lcm(den, Integer(c.get_den()));
  std::ostringstream body;
  bool first = true;
  for (const auto& [ct, c] : p.terms()) {
    const Rational scaled = c * Rational(den);
    const Integer num = scaled.get_num();
    if (sgn(num) < 0) {
      body << '-';
    } else if (!first) {
      body << '+';
    }
    first = false;
    const Integer mag = abs(num);
    if (ct.empty() || mag != 1) body << mag.get_str();
    render_latex_monomial(body, ct);
  }
  if (den == 1) return body.str();
  return "\\frac{1}{" + den.get_str() + "}\\left(" + body.str() + "\\right)";
}

std::string render_json(const CycleIndexPoly& p) {
  using ojson = nlohmann::ordered_json;
  ojson terms = ojson::array();
  bool integral = true;
  for (const auto& [ct, c] : p.terms()) {
    if (c.get_den() != 1) integral = false;
    ojson mono = ojson::object();
    for (const auto& [i, e] : ct.exponents()) mono[std::to_string(i)] = e;
    terms.push_back(ojson{{"coeff", c.get_num().get_str() + "/" + c.get_den().get_str()},
                          {"monomial", std::move(mono)}});
  }
  ojson doc;
  doc["denominator_free"] = integral;
  doc["terms"] = std::move(terms);
  return doc.dump();
}

}  // namespace

Rational make_rational(u64 num, u64 den) {
  Rational r(make_integer(num), make_integer(den));
  r.canonicalize();
  return r;
}

Integer make_integer(u64 v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

// ---- CycleType ----------------------------------------------------------

CycleType::CycleType(Exponents exps) : exps_(std::move(exps)) {
  std::erase_if(exps_, [](const auto& kv) { return kv.second == 0; });
  if (exps_.contains(0)) throw std::invalid_argument("cycle length 0");
}

CycleType CycleType::power(u64 length, u64 count) {
  if (length == 0) throw std::invalid_argument("cycle length 0");
  CycleType ct;
  if (count > 0) ct.exps_.emplace(length, count);
  return ct;
}

u64 CycleType::exponent(u64 length) const {
  const auto it = exps_.find(length);
  return it == exps_.end() ? 0 : it->second;
}

u64 CycleType::degree() const {
  u64 d = 0;
  for (const auto& [i, e] : exps_) d += i * e;
  return d;
}

u64 CycleType::max_index() const { return exps_.empty() ? 0 : exps_.rbegin()->first; }

CycleType& CycleType::operator*=(const CycleType& other) {
  for (const auto& [i, e] : other.exps_) exps_[i] += e;
  return *this;
}

bool TermOrder::operator()(const CycleType& a, const CycleType& b) const {
  const u64 da = a.degree();
  const u64 db = b.degree();
  if (da != db) return da > db;
  auto ia = a.exponents().begin();
  auto ib = b.exponents().begin();
  const auto ea = a.exponents().end();
  const auto eb = b.exponents().end();
  while (ia != ea && ib != eb) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia;
    ++ib;
  }
  return ia != ea && ib == eb;
}

CycleType star_monomial(u64 l, u64 i, u64 m, u64 j) {
  return CycleType::power(std::lcm(l, m), i * j * std::gcd(l, m));
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "plain") return Format::plain;
  if (name == "latex") return Format::latex;
  if (name == "json") return Format::json;
  return std::nullopt;
}

// ---- CycleIndexPoly -----------------------------------------------------

CycleIndexPoly CycleIndexPoly::monomial(const CycleType& ct, const Rational& c) {
  CycleIndexPoly p;
  p.add_term(ct, c);
  return p;
}

Rational CycleIndexPoly::coefficient(const CycleType& ct) const {
  const auto it = terms_.find(ct);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CycleIndexPoly::add_term(const CycleType& ct, const Rational& coeff) {
  // mpq arithmetic assumes canonical operands; callers may pass e.g. 2/4
  Rational c = coeff;
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(ct, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

u64 CycleIndexPoly::max_index() const {
  u64 m = 0;
  for (const auto& [ct, c] : terms_) m = std::max(m, ct.max_index());
  return m;
}

CycleIndexPoly& CycleIndexPoly::operator+=(const CycleIndexPoly& other) {
  for (const auto& [ct, c] : other.terms_) add_term(ct, c);
  return *this;
}

CycleIndexPoly& CycleIndexPoly::operator*=(const Rational& factor) {
  Rational c = factor;
  c.canonicalize();
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [ct, coeff] : terms_) coeff *= c;
  return *this;
}

CycleIndexPoly CycleIndexPoly::operator-() const { return *this * Rational(-1); }

CycleIndexPoly star_product(const CycleIndexPoly& p, const CycleIndexPoly& q) {
  CycleIndexPoly out;
  for (const auto& [tp, cp] : p.terms()) {
    for (const auto& [tq, cq] : q.terms()) {
      CycleType prod;
      for (const auto& [l, i] : tp.exponents()) {
        for (const auto& [m, j] : tq.exponents()) prod *= star_monomial(l, i, m, j);
      }
      out.add_term(prod, cp * cq);
    }
  }
  return out;
}

Rational evaluate(const CycleIndexPoly& p, const std::map<u64, Rational>& assignment) {
  Rational total = 0;
  for (const auto& [ct, c] : p.terms()) {
    Rational term = c;
    for (const auto& [i, e] : ct.exponents()) {
      const auto it = assignment.find(i);
      if (it == assignment.end())
        throw std::invalid_argument("evaluate: no value for x" + std::to_string(i));
      Integer num, den;
      mpz_pow_ui(num.get_mpz_t(), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(den.get_mpz_t(), it->second.get_den_mpz_t(), e);
      term *= Rational(num, den);
    }
    total += term;
  }
  total.canonicalize();
  return total;
}

Rational evaluate_uniform(const CycleIndexPoly& p, const Rational& value) {
  std::map<u64, Rational> assignment;
  for (const auto& [ct, c] : p.terms()) {
    for (const auto& [i, e] : ct.exponents()) assignment.emplace(i, value);
  }
  return evaluate(p, assignment);
}

std::string render(const CycleType& ct, Format format) {
  if (ct.empty()) return "1";
  std::ostringstream os;
  switch (format) {
    case Format::plain:
      render_plain_monomial(os, ct);
      return os.str();
    case Format::latex:
      render_latex_monomial(os, ct);
      return os.str();
    case Format::json: {
      nlohmann::ordered_json mono = nlohmann::ordered_json::object();
      for (const auto& [i, e] : ct.exponents()) mono[std::to_string(i)] = e;
      return mono.dump();
    }
  }
  return {};
}

std::string render(const CycleIndexPoly& p, Format format) {
  switch (format) {
    case Format::plain: return render_plain(p);
    case Format::latex: return render_latex(p);
    case Format::json: return render_json(p);
  }
  return {};
}

CycleIndexPoly parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("parse_json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array())
    throw std::invalid_argument("parse_json: expected an object with a \"terms\" array");
  CycleIndexPoly p;
  for (const auto& term : doc["terms"]) {
    if (!term.is_object() || !term.contains("coeff") || !term["coeff"].is_string() ||
        !term.contains("monomial") || !term["monomial"].is_object())
      throw std::invalid_argument("parse_json: malformed term");
    CycleType::Exponents exps;
    for (const auto& [key, value] : term["monomial"].items()) {
      if (!value.is_number_unsigned())
        throw std::invalid_argument("parse_json: exponent must be a nonnegative integer");
      const u64 idx = parse_index(key);
      if (idx == 0) throw std::invalid_argument("parse_json: variable index 0");
      exps[idx] += value.get<u64>();
    }
    p.add_term(CycleType(std::move(exps)), parse_rational(term["coeff"].get<std::string>()));
  }
  return p;
}

std::optional<std::string> first_difference(const CycleIndexPoly& p, const CycleIndexPoly& q) {
  auto ip = p.terms().begin();
  auto iq = q.terms().begin();
  const TermOrder before;
  while (ip != p.terms().end() || iq != q.terms().end()) {
    const CycleType* ct = nullptr;
    if (iq == q.terms().end() || (ip != p.terms().end() && before(ip->first, iq->first))) {
      ct = &ip->first;
    } else {
      ct = &iq->first;
    }
    const Rational a = p.coefficient(*ct);
    const Rational b = q.coefficient(*ct);
    if (a != b) return render(*ct, Format::plain) + ": " + rational_string(a) + " vs " + rational_string(b);
    if (ip != p.terms().end() && ip->first == *ct) ++ip;
    if (iq != q.terms().end() && iq->first == *ct) ++iq;
  }
  return std::nullopt;
}

}  // namespace unitcycle
