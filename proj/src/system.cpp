#include "gmlab/system.hpp"

#include <algorithm>
#include <set>

#include "gmlab/io.hpp"
#include "gmlab/scalar.hpp"

namespace gmlab {

namespace {

std::string join_vector(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

TranspositionSystem dihedral_model(int p) {
  TranspositionSystem sys;
  sys.n = p;
  sys.p = p;
  for (int i = 0; i < p; ++i) sys.labels.push_back("r" + std::to_string(i) + "s");
  sys.conj.assign(p, std::vector<int>(p));
  // (r^i s)^(r^j s) = r^(2j-i) s.
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) sys.conj[i][j] = ((2 * j - i) % p + p) % p;
  return sys;
}

TranspositionSystem frobenius_model(int p, int d) {
  long long n = 1;
  for (int k = 0; k < d; ++k) {
    n *= p;
    if (n > 10000) throw ParseError("frobenius model too large");
  }
  TranspositionSystem sys;
  sys.n = static_cast<int>(n);
  sys.p = p;
  auto decode = [&](int idx) {
    std::vector<int> v(d);
    for (int k = 0; k < d; ++k) {
      v[k] = idx % p;
      idx /= p;
    }
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    int idx = 0;
    for (int k = d - 1; k >= 0; --k) idx = idx * p + v[k];
    return idx;
  };
  for (int i = 0; i < sys.n; ++i) sys.labels.push_back(join_vector(decode(i)) + "t");
  sys.conj.assign(sys.n, std::vector<int>(sys.n));
  // (v.t)^(w.t) = (2w - v).t componentwise mod p.
  for (int i = 0; i < sys.n; ++i) {
    const std::vector<int> v = decode(i);
    for (int j = 0; j < sys.n; ++j) {
      const std::vector<int> w = decode(j);
      std::vector<int> img(d);
      for (int k = 0; k < d; ++k) img[k] = ((2 * w[k] - v[k]) % p + p) % p;
      sys.conj[i][j] = encode(img);
    }
  }
  return sys;
}

// The 27-involution exponent-3 model: the carrier E is the group of triples
// over Z_3 under componentwise addition, extended by the involution t that
// acts by inversion. Every element of the coset E.t squares to the identity,
// so T is the full coset; the table is extracted by actual conjugation in the
// order-54 extension.
TranspositionSystem burnside23_model() {
  constexpr int kP = 3;
  constexpr int kDim = 3;
  constexpr int kN = 27;

  auto decode = [](int idx) {
    std::vector<int> v(kDim);
    for (int k = 0; k < kDim; ++k) {
      v[k] = idx % kP;
      idx /= kP;
    }
    return v;
  };
  auto encode = [](const std::vector<int>& v) {
    int idx = 0;
    for (int k = kDim - 1; k >= 0; --k) idx = idx * kP + v[k];
    return idx;
  };
  auto carrier_add = [&](int a, int b) {
    const std::vector<int> u = decode(a), v = decode(b);
    std::vector<int> w(kDim);
    for (int k = 0; k < kDim; ++k) w[k] = (u[k] + v[k]) % kP;
    return encode(w);
  };
  auto invert = [&](int a) {
    const std::vector<int> u = decode(a);
    std::vector<int> w(kDim);
    for (int k = 0; k < kDim; ++k) w[k] = (kP - u[k]) % kP;
    return encode(w);
  };

  // The extension is well formed only if inversion is an automorphism of E of
  // order two that inverts the generators; check all of it outright.
  for (int a = 0; a < kN; ++a) {
    if (invert(invert(a)) != a) throw MathError("burnside23: inversion is not an involution");
    if (carrier_add(a, invert(a)) != 0) throw MathError("burnside23: inversion is not -1");
    for (int b = 0; b < kN; ++b)
      if (invert(carrier_add(a, b)) != carrier_add(invert(a), invert(b)))
        throw MathError("burnside23: inversion is not a homomorphism");
  }

  // Elements of E x <t> as (g, eps); (g,eps)(h,delta) = (g + eps.h, eps.delta).
  struct Elt {
    int g;
    int eps;  // +1 or -1
  };
  auto mul = [&](Elt x, Elt y) {
    return Elt{carrier_add(x.g, x.eps == 1 ? y.g : invert(y.g)), x.eps * y.eps};
  };

  // T = involutions of the coset E.t; all 27 coset elements qualify.
  std::vector<int> invs;
  for (int g = 0; g < kN; ++g)
    if (Elt sq = mul({g, -1}, {g, -1}); sq.g == 0 && sq.eps == 1) invs.push_back(g);
  if (invs.size() != kN) throw MathError("burnside23: unexpected involution count");

  TranspositionSystem sys;
  sys.n = kN;
  sys.p = kP;
  for (int g : invs) sys.labels.push_back(join_vector(decode(g)) + "t");
  sys.conj.assign(kN, std::vector<int>(kN));
  for (int i = 0; i < kN; ++i)
    for (int j = 0; j < kN; ++j) {
      const Elt a{invs[i], -1}, b{invs[j], -1};
      const Elt conjed = mul(mul(b, a), b);  // b^{-1} a b with b an involution
      if (conjed.eps != -1) throw MathError("burnside23: conjugate left the coset");
      sys.conj[i][j] =
          static_cast<int>(std::find(invs.begin(), invs.end(), conjed.g) - invs.begin());
    }
  return sys;
}

}  // namespace

TranspositionSystem construct_model(const std::string& spec) {
  TranspositionSystem sys;
  if (spec.rfind("dihedral:", 0) == 0) {
    const std::string body = spec.substr(9);
    if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad model spec '" + spec + "'");
    const int p = std::stoi(body);
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
      throw ParseError("dihedral model needs an odd prime, got " + body);
    sys = dihedral_model(p);
  } else if (spec.rfind("frobenius:", 0) == 0) {
    const std::string body = spec.substr(10);
    const std::size_t comma = body.find(',');
    if (comma == std::string::npos) throw ParseError("bad model spec '" + spec + "'");
    const std::string ps = body.substr(0, comma), ds = body.substr(comma + 1);
    if (ps.empty() || ds.empty() ||
        ps.find_first_not_of("0123456789") != std::string::npos ||
        ds.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad model spec '" + spec + "'");
    const int p = std::stoi(ps), d = std::stoi(ds);
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
      throw ParseError("frobenius model needs an odd prime, got " + ps);
    if (d < 1) throw ParseError("frobenius model needs d >= 1");
    sys = frobenius_model(p, d);
  } else if (spec == "burnside23") {
    sys = burnside23_model();
  } else if (spec.rfind("file:", 0) == 0) {
    sys = load_system_file(spec.substr(5));
  } else {
    throw ParseError("unknown model spec '" + spec + "'");
  }

  const ValidationReport report = validate_system(sys);
  if (!report.ok()) {
    std::string msg = "invalid transposition system (" + spec + "):";
    for (std::size_t i = 0; i < report.failures.size() && i < 3; ++i)
      msg += " [" + report.failures[i].check + "] " + report.failures[i].detail + ";";
    throw MathError(msg);
  }
  return sys;
}

std::vector<int> dihedral_set(const TranspositionSystem& sys, int i, int j) {
  if (i == j) throw std::invalid_argument("dihedral_set needs two distinct indices");
  std::vector<int> seq = {i, j};
  for (int k = 2; k < sys.p; ++k)
    seq.push_back(sys.conj[seq[k - 2]][seq[k - 1]]);
  return seq;
}

ValidationReport validate_system(const TranspositionSystem& sys) {
  ValidationReport report;
  auto fail = [&](const std::string& check, const std::string& detail) {
    report.failures.push_back({check, detail});
  };

  if (sys.n < 2) {
    fail("size", "system must contain at least two transpositions");
    return report;
  }
  if (sys.p < 3 || !is_prime(static_cast<std::uint64_t>(sys.p))) {
    fail("p-prime", "p = " + std::to_string(sys.p) + " is not an odd prime");
    return report;
  }
  if (static_cast<int>(sys.labels.size()) != sys.n)
    fail("labels", "label count differs from n");
  if (static_cast<int>(sys.conj.size()) != sys.n) {
    fail("shape", "conjugation table has wrong row count");
    return report;
  }
  for (int i = 0; i < sys.n; ++i) {
    if (static_cast<int>(sys.conj[i].size()) != sys.n) {
      fail("shape", "row " + std::to_string(i) + " has wrong length");
      return report;
    }
    for (int j = 0; j < sys.n; ++j)
      if (sys.conj[i][j] < 0 || sys.conj[i][j] >= sys.n) {
        fail("range", "conj[" + std::to_string(i) + "][" + std::to_string(j) + "] out of range");
        return report;
      }
  }

  for (int i = 0; i < sys.n; ++i)
    if (sys.conj[i][i] != i)
      fail("self-fix", "conj[" + std::to_string(i) + "][" + std::to_string(i) + "] = " +
                           std::to_string(sys.conj[i][i]) + ", expected " + std::to_string(i));

  for (int j = 0; j < sys.n; ++j) {
    std::vector<bool> seen(sys.n, false);
    for (int i = 0; i < sys.n; ++i) {
      const int img = sys.conj[i][j];
      if (seen[img])
        fail("permutation", "column " + std::to_string(j) + " repeats image " +
                                std::to_string(img));
      seen[img] = true;
      if (sys.conj[img][j] != i)
        fail("involution", "conjugation by " + std::to_string(j) +
                               " is not an involution at " + std::to_string(i));
    }
  }

  if ((sys.n - 1) % (sys.p - 1) != 0)
    fail("block-count", "(n-1) = " + std::to_string(sys.n - 1) +
                            " is not divisible by (p-1) = " + std::to_string(sys.p - 1));

  if (!report.ok()) return report;  // pair checks assume a sane table

  for (int i = 0; i < sys.n; ++i) {
    for (int j = i + 1; j < sys.n; ++j) {
      const std::vector<int> seq = dihedral_set(sys, i, j);
      std::set<int> distinct(seq.begin(), seq.end());
      if (static_cast<int>(distinct.size()) != sys.p) {
        fail("dihedral-size", "I(" + std::to_string(i) + "," + std::to_string(j) +
                                  ") has " + std::to_string(distinct.size()) +
                                  " elements, expected " + std::to_string(sys.p));
        continue;
      }
      // conj restricted to I(i,j) must be the reflection model under the
      // canonical relabeling: c_u ^ c_v = c_{2v-u mod p}.
      for (int u = 0; u < sys.p; ++u)
        for (int v = 0; v < sys.p; ++v) {
          const int expected = seq[((2 * v - u) % sys.p + sys.p) % sys.p];
          if (sys.conj[seq[u]][seq[v]] != expected) {
            fail("dihedral-shape", "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                       "): conj[" + std::to_string(seq[u]) + "][" +
                                       std::to_string(seq[v]) + "] deviates from the model");
            u = v = sys.p;  // one witness per pair
          }
        }
    }
  }
  return report;
}

BlockPartition blocks(const TranspositionSystem& sys, int axis) {
  BlockPartition part;
  part.axis = axis;
  std::vector<bool> assigned(sys.n, false);
  assigned[axis] = true;
  for (int b = 0; b < sys.n; ++b) {
    if (assigned[b]) continue;
    const std::vector<int> seq = dihedral_set(sys, axis, b);
    std::vector<int> block;
    for (int x : seq)
      if (x != axis) {
        block.push_back(x);
        assigned[x] = true;
      }
    std::sort(block.begin(), block.end());
    part.blocks.push_back(std::move(block));
    part.representatives.push_back(b);
  }
  return part;
}

ConjugationGroup conjugation_group(const TranspositionSystem& sys, std::size_t cap) {
  ConjugationGroup out;
  for (int a = 0; a < sys.n; ++a) {
    Permutation perm(sys.n);
    for (int i = 0; i < sys.n; ++i) perm[i] = sys.conj[i][a];
    out.generators.push_back(std::move(perm));
  }
  const GroupClosure closure = close_group(out.generators, cap);
  out.complete = closure.complete;
  out.order = closure.order;
  return out;
}

}  // namespace gmlab
