#pragma once

// Serialization and rendering: the JSON wire formats for multivectors,
// polynomials, and bases, plus plain-text and LaTeX views with the optional
// planar shorthand (z, w combinations of the first two coordinates).

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtb/gt_basis.hpp"
#include "gtb/verify.hpp"

namespace gtb {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON writers.

inline void scalar_fields(ordered_json& j, const Scalar& c, bool with_im) {
  j["re"] = rational_to_string(c.re);
  if (with_im)
    j["im"] = rational_to_string(c.im);
  else if (sgn(c.im) != 0)
    throw std::invalid_argument("serialize: complex coefficient in real mode");
}

inline ordered_json blade_to_json(Blade b) {
  ordered_json arr = ordered_json::array();
  for (int i : blade_indices(b)) arr.push_back(i);
  return arr;
}

inline ordered_json mv_to_json(const Multivector& v, bool complex_mode = true) {
  ordered_json j;
  j["dim"] = v.dim();
  ordered_json terms = ordered_json::array();
  for (const auto& [b, c] : v.terms()) {
    ordered_json t;
    t["blade"] = blade_to_json(b);
    scalar_fields(t, c, complex_mode);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline const char* mode_name(AlgebraMode mode) {
  return mode == AlgebraMode::complex_mode ? "complex" : "real";
}

inline ordered_json poly_to_json(const MVPolynomial& p, AlgebraMode mode = AlgebraMode::complex_mode) {
  ordered_json j;
  j["dim"] = p.dim();
  j["algebra"] = mode_name(mode);
  ordered_json terms = ordered_json::array();
  for (const auto& [k, c] : p.terms()) {
    ordered_json t;
    ordered_json exps = ordered_json::array();
    for (auto e : k.mono.e) exps.push_back(static_cast<int>(e));
    t["exps"] = std::move(exps);
    t["blade"] = blade_to_json(k.blade);
    scalar_fields(t, c, mode == AlgebraMode::complex_mode);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline const char* kind_name(BasisKind kind) {
  switch (kind) {
    case BasisKind::hodge: return "hodge";
    case BasisKind::harmonic: return "harmonic";
    case BasisKind::riesz: return "riesz";
    case BasisKind::gmt: return "gmt";
  }
  return "hodge";
}

inline ordered_json basis_to_json(const Basis& b) {
  ordered_json meta;
  meta["m"] = b.meta.m;
  meta["k"] = b.meta.k;
  if (b.meta.kind == BasisKind::gmt) {
    ordered_json set = ordered_json::array();
    for (int s : b.meta.S) set.push_back(s);
    meta["S"] = std::move(set);
  } else {
    meta["s"] = b.meta.s;
  }
  meta["mode"] = mode_name(b.meta.mode);
  meta["kind"] = kind_name(b.meta.kind);
  ordered_json elements = ordered_json::array();
  for (const auto& el : b.elements) {
    ordered_json e;
    e["label"] = el.label;
    e["poly"] = poly_to_json(el.poly, b.meta.mode);
    elements.push_back(std::move(e));
  }
  ordered_json j;
  j["meta"] = std::move(meta);
  j["elements"] = std::move(elements);
  return j;
}

// ---------------------------------------------------------------------------
// JSON readers.

inline Scalar scalar_from_fields(const ordered_json& t) {
  Rational re = rational_from_string(t.at("re").get<std::string>());
  Rational im(0);
  if (t.contains("im")) im = rational_from_string(t.at("im").get<std::string>());
  return Scalar(re, im);
}

inline Blade blade_from_json(const ordered_json& arr, int dim) {
  std::vector<int> idx;
  for (const auto& v : arr) idx.push_back(v.get<int>());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 1 || idx[i] > dim) throw std::invalid_argument("deserialize: blade index out of range");
    if (i > 0 && idx[i] <= idx[i - 1]) throw std::invalid_argument("deserialize: blade not strictly increasing");
  }
  return blade_from_indices(idx, dim);
}

inline Multivector mv_from_json(const ordered_json& j) {
  Multivector v(j.at("dim").get<int>());
  for (const auto& t : j.at("terms")) v.add_term(blade_from_json(t.at("blade"), v.dim()), scalar_from_fields(t));
  return v;
}

inline MVPolynomial poly_from_json(const ordered_json& j) {
  int dim = j.at("dim").get<int>();
  MVPolynomial p(dim);
  for (const auto& t : j.at("terms")) {
    const auto& exps = t.at("exps");
    if (static_cast<int>(exps.size()) != dim)
      throw std::invalid_argument("deserialize: exponent list has wrong length");
    Monomial mo;
    for (const auto& e : exps) {
      int v = e.get<int>();
      if (v < 0 || v > 255) throw std::invalid_argument("deserialize: exponent out of range");
      mo.e.push_back(static_cast<std::uint8_t>(v));
    }
    p.add_term(mo, blade_from_json(t.at("blade"), dim), scalar_from_fields(t));
  }
  return p;
}

inline AlgebraMode mode_from_name(const std::string& name) {
  if (name == "complex") return AlgebraMode::complex_mode;
  if (name == "real") return AlgebraMode::real_mode;
  throw std::invalid_argument("deserialize: unknown algebra mode '" + name + "'");
}

inline BasisKind kind_from_name(const std::string& name) {
  if (name == "hodge") return BasisKind::hodge;
  if (name == "harmonic") return BasisKind::harmonic;
  if (name == "riesz") return BasisKind::riesz;
  if (name == "gmt") return BasisKind::gmt;
  throw std::invalid_argument("deserialize: unknown basis kind '" + name + "'");
}

inline Basis basis_from_json(const ordered_json& j) {
  const auto& meta = j.at("meta");
  Basis b;
  b.meta.m = meta.at("m").get<int>();
  b.meta.k = meta.at("k").get<int>();
  b.meta.mode = mode_from_name(meta.at("mode").get<std::string>());
  if (meta.contains("S")) {
    b.meta.kind = BasisKind::gmt;
    b.meta.s = -1;
    for (const auto& v : meta.at("S")) b.meta.S.insert(v.get<int>());
  } else {
    b.meta.s = meta.at("s").get<int>();
  }
  if (meta.contains("kind")) b.meta.kind = kind_from_name(meta.at("kind").get<std::string>());
  for (const auto& e : j.at("elements")) {
    BasisElement el{e.at("label").get<GTLabel>(), poly_from_json(e.at("poly"))};
    b.elements.push_back(std::move(el));
  }
  return b;
}

// ---------------------------------------------------------------------------
// Rendering.  Every term is decomposed into display factors; with the planar
// shorthand enabled, x_1, x_2 are rewritten through z = x_1 + i x_2 and the
// frame vectors e_1, e_2 through w = e_1 + i e_2 (blades containing both
// planar indices are kept whole).

namespace detail {

struct DisplayKey {
  int zp = 0, zm = 0;               // exponents of the planar combinations
  std::vector<std::uint8_t> rest;   // exponents of x_3..x_m (or all, plain mode)
  int wsym = 0;                     // 0: none, 1: w_+, 2: w_-
  Blade blade = 0;

  bool operator<(const DisplayKey& o) const {
    if (zp != o.zp) return zp < o.zp;
    if (zm != o.zm) return zm < o.zm;
    if (rest != o.rest) return rest < o.rest;
    if (wsym != o.wsym) return wsym < o.wsym;
    return blade < o.blade;
  }
};

inline void accumulate(std::map<DisplayKey, Scalar>& acc, const DisplayKey& key, const Scalar& c) {
  auto [it, fresh] = acc.try_emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

inline std::map<DisplayKey, Scalar> display_terms(const MVPolynomial& p, bool zw) {
  std::map<DisplayKey, Scalar> acc;
  int m = p.dim();
  for (const auto& [k, c] : p.terms()) {
    if (!zw) {
      DisplayKey key;
      key.rest = k.mono.e;
      key.blade = k.blade;
      accumulate(acc, key, c);
      continue;
    }
    // split the blade's planar part
    int a = k.mono.e[0], b = (m >= 2) ? k.mono.e[1] : 0;
    bool has1 = (k.blade & Blade{1}) != 0, has2 = (k.blade & Blade{2}) != 0;
    std::vector<std::pair<int, Scalar>> blade_parts;  // (wsym, factor)
    Blade rest_blade = k.blade;
    if (has1 != has2) {
      rest_blade = k.blade & ~Blade{3};
      if (has1) {  // e_1 = (w_+ + w_-)/2, in front since 1 is the least index
        blade_parts = {{1, Scalar::of(1, 2)}, {2, Scalar::of(1, 2)}};
      } else {     // e_2 = -(i/2) w_+ + (i/2) w_-
        blade_parts = {{1, Scalar(Rational(0), rational_of(-1, 2))}, {2, Scalar(Rational(0), rational_of(1, 2))}};
      }
    } else {
      blade_parts = {{0, Scalar::one()}};
    }
    // x_1^a x_2^b = sum_{p<=a,q<=b} C(a,p) C(b,q) (1/2)^a (-i/2)^b (-1)^{b-q} z_+^{p+q} z_-^{a+b-p-q}
    for (int pp = 0; pp <= a; ++pp)
      for (int q = 0; q <= b; ++q) {
        Rational coef = Rational(binomial(a, pp) * binomial(b, q)) /
                        Rational(Integer(Integer(1) << (a + b)));
        Scalar zc(coef);
        // each x_2 factor contributes 1/(2i) = -i/2; the (-1)^{b-q} sign from -z_-
        int ipow = b % 4;
        Scalar ifac = Scalar::one();
        for (int t = 0; t < ipow; ++t) ifac *= -Scalar::i();
        zc *= ifac;
        if ((b - q) % 2 == 1) zc = -zc;
        for (const auto& [wsym, bf] : blade_parts) {
          DisplayKey key;
          key.zp = pp + q;
          key.zm = a + b - pp - q;
          key.rest.assign(k.mono.e.begin() + (m >= 2 ? 2 : 1), k.mono.e.end());
          key.wsym = wsym;
          key.blade = rest_blade;
          accumulate(acc, key, c * zc * bf);
        }
      }
  }
  return acc;
}

inline std::string coeff_str(const Scalar& c, bool latex) {
  if (c == Scalar::one()) return "+";
  if (c == Scalar(-1)) return "-";
  std::string s = c.str();
  bool composite = s.find_first_of("+-", 1) != std::string::npos;
  if (composite) return latex ? "+\\left(" + s + "\\right)" : "+(" + s + ")";
  return s.front() == '-' ? s : "+" + s;
}

inline std::string power_str(const std::string& base, int e, bool latex) {
  if (e == 1) return base;
  if (latex) return base + "^{" + std::to_string(e) + "}";
  return base + "^" + std::to_string(e);
}

inline std::string render_term(const DisplayKey& key, const Scalar& c, bool zw, bool latex) {
  std::vector<std::string> factors;
  if (zw) {
    if (key.zp > 0) factors.push_back(power_str(latex ? "z_{+}" : "z+", key.zp, latex));
    if (key.zm > 0) factors.push_back(power_str(latex ? "z_{-}" : "z-", key.zm, latex));
  }
  int offset = zw ? 2 : 0;
  for (std::size_t i = 0; i < key.rest.size(); ++i)
    if (key.rest[i] != 0) {
      std::string base = latex ? "x_{" + std::to_string(offset + static_cast<int>(i) + 1) + "}"
                               : "x" + std::to_string(offset + static_cast<int>(i) + 1);
      factors.push_back(power_str(base, key.rest[i], latex));
    }
  if (key.wsym == 1) factors.push_back(latex ? "w_{+}" : "w+");
  if (key.wsym == 2) factors.push_back(latex ? "w_{-}" : "w-");
  if (key.blade != 0) {
    std::string idx;
    for (int i : blade_indices(key.blade)) idx += std::to_string(i);
    factors.push_back(latex ? "e_{" + idx + "}" : "e" + idx);
  }

  std::string cs = coeff_str(c, latex);
  std::string body;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) body += " ";
    body += factors[i];
  }
  if (body.empty()) {  // pure constant: print the coefficient itself
    std::string s = c.str();
    bool composite = s.find_first_of("+-", 1) != std::string::npos;
    if (composite) return "+(" + s + ")";
    return s.front() == '-' ? s : "+" + s;
  }
  if (cs == "+") return "+" + body;
  if (cs == "-") return "-" + body;
  return cs + " " + body;
}

}  // namespace detail

inline std::string poly_to_text(const MVPolynomial& p, bool zw = false, bool latex = false) {
  if (p.is_zero()) return "0";
  auto acc = detail::display_terms(p, zw && p.dim() >= 2);
  std::string out;
  bool first = true;
  for (const auto& [key, c] : acc) {
    std::string t = detail::render_term(key, c, zw && p.dim() >= 2, latex);
    if (first && !t.empty() && t.front() == '+') t.erase(0, 1);
    if (!first) out += " ";
    out += first ? t : (t.front() == '-' ? "- " + t.substr(1) : "+ " + t.substr(1));
    first = false;
  }
  return out;
}

inline std::string basis_to_text(const Basis& b, bool latex = false) {
  bool zw = true;
  std::ostringstream os;
  if (!latex) {
    os << "# m=" << b.meta.m << " k=" << b.meta.k;
    if (b.meta.kind == BasisKind::gmt) {
      os << " S={";
      bool first = true;
      for (int s : b.meta.S) {
        if (!first) os << ",";
        os << s;
        first = false;
      }
      os << "}";
    } else {
      os << " s=" << b.meta.s;
    }
    os << " mode=" << mode_name(b.meta.mode) << " kind=" << kind_name(b.meta.kind)
       << " count=" << b.elements.size() << "\n";
  }
  std::size_t i = 0;
  for (const auto& el : b.elements) {
    ++i;
    if (latex)
      os << poly_to_text(el.poly, zw, true) << " \\\\\n";
    else
      os << i << ") [" << label_str(el.label) << "] " << poly_to_text(el.poly, zw, false) << "\n";
  }
  return os.str();
}

}  // namespace gtb
