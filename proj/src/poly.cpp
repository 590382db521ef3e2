#include "dp1/poly.hpp"

#include <algorithm>

namespace dp1 {

Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw Error("cannot parse rational '" + s + "'");
  }
}

std::string rational_string(const Rat& r) {
  std::string num = numerator(r).str();
  if (denominator(r) == 1) return num;
  return num + "/" + denominator(r).str();
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::leading() const {
  if (is_zero()) throw Error("leading coefficient of the zero polynomial");
  return c_.back();
}

Rat Poly::eval(const Rat& x) const {
  Rat v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

Poly Poly::derivative() const {
  std::vector<Rat> d;
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * c_[i]);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Rat inv = 1 / leading();
  return inv * *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly operator*(const Rat& k, const Poly& a) {
  std::vector<Rat> c = a.c_;
  for (auto& x : c) x *= k;
  return Poly(std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  int db = b.degree();
  std::vector<Rat> quot(a.degree() >= db ? static_cast<size_t>(a.degree() - db + 1) : 0,
                        Rat(0));
  for (int i = a.degree(); i >= db; --i) {
    size_t ui = static_cast<size_t>(i);
    if (rem.size() <= ui || rem[ui] == 0) continue;
    Rat f = rem[ui] / b.leading();
    quot[static_cast<size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<size_t>(i - db + j)] -= f * b.coeffs()[static_cast<size_t>(j)];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  std::vector<std::pair<Poly, int>> parts;
  if (f.degree() < 1) return parts;
  Poly u = poly_gcd(f, f.derivative());
  Poly v = poly_divmod(f, u).first;  // product of the distinct factors
  int i = 1;
  while (u.degree() > 0) {
    Poly w = poly_gcd(u, v);  // factors of multiplicity > i
    Poly fi = poly_divmod(v, w).first;
    if (fi.degree() > 0) parts.emplace_back(fi.monic(), i);
    v = std::move(w);
    u = poly_divmod(u, v).first;
    ++i;
  }
  if (v.degree() > 0) parts.emplace_back(v.monic(), i);
  return parts;
}

namespace {

std::vector<Poly> sturm_chain(const Poly& f) {
  std::vector<Poly> chain{f, f.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Poly r = poly_divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(Rat(-1) * r);
    if (chain.back().is_zero()) break;
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int variations(const std::vector<Poly>& chain, const Rat& x) {
  int count = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sign_of(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

Rat cauchy_bound(const Poly& f) {
  Rat m = 0;
  for (const auto& c : f.coeffs()) {
    Rat a = abs(c / f.leading());
    if (a > m) m = a;
  }
  return m + 1;
}

void isolate_rec(const Poly& f, const std::vector<Poly>& chain, const Rat& a,
                 const Rat& b, int va, int vb, std::vector<IsolatedRoot>& out) {
  int n = va - vb;  // roots in (a, b]
  if (n == 0) return;
  if (n == 1) {
    if (f.eval(b) == 0) {
      IsolatedRoot r;
      r.exact = true;
      r.value = b;
      out.push_back(std::move(r));
      return;
    }
    Rat lo = a, hi = b;
    while (f.eval(lo) == 0) {
      Rat m = (lo + hi) / 2;
      Rat fm = f.eval(m);
      if (fm == 0) {
        IsolatedRoot r;
        r.exact = true;
        r.value = m;
        out.push_back(std::move(r));
        return;
      }
      if (variations(chain, m) == vb)
        hi = m;  // root in (lo, m]
      else
        lo = m;
    }
    IsolatedRoot r;
    r.lo = lo;
    r.hi = hi;
    out.push_back(std::move(r));
    return;
  }
  Rat m = (a + b) / 2;
  int vm = variations(chain, m);
  isolate_rec(f, chain, a, m, va, vm, out);
  isolate_rec(f, chain, m, b, vm, vb, out);
}

}  // namespace

int sturm_count(const Poly& f, const Rat& a, const Rat& b) {
  if (f.degree() < 1) return 0;
  auto chain = sturm_chain(f);
  return variations(chain, a) - variations(chain, b);
}

std::vector<IsolatedRoot> isolate_real_roots(const Poly& f) {
  std::vector<IsolatedRoot> out;
  if (f.degree() < 1) return out;
  if (poly_gcd(f, f.derivative()).degree() > 0)
    throw Error("isolate_real_roots requires a squarefree polynomial");
  auto chain = sturm_chain(f);
  Rat bound = cauchy_bound(f);
  isolate_rec(f, chain, -bound, bound, variations(chain, -bound),
              variations(chain, bound), out);
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& x, const IsolatedRoot& y) {
    Rat xv = x.exact ? x.value : x.lo;
    Rat yv = y.exact ? y.value : y.lo;
    return xv < yv;
  });
  return out;
}

int sign_at_root(const Poly& p, const Poly& f, IsolatedRoot& r) {
  if (r.exact) return sign_of(p.eval(r.value));
  if (p.is_zero()) return 0;
  if (p.degree() == 0) return sign_of(p.leading());
  Poly p_red = poly_divmod(p, poly_gcd(p, p.derivative())).first;  // squarefree part
  auto p_chain = sturm_chain(p_red);
  while (true) {
    Rat plo = p.eval(r.lo), phi = p.eval(r.hi);
    if (plo != 0 && phi != 0 && sign_of(plo) == sign_of(phi) &&
        variations(p_chain, r.lo) == variations(p_chain, r.hi))
      return sign_of(plo);
    Rat m = (r.lo + r.hi) / 2;
    Rat fm = f.eval(m);
    if (fm == 0) {
      r.exact = true;
      r.value = m;
      return sign_of(p.eval(m));
    }
    if (sign_of(fm) == sign_of(f.eval(r.lo)))
      r.lo = m;
    else
      r.hi = m;
  }
}

}  // namespace dp1
