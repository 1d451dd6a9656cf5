#include "bmangle/invariants.hpp"

#include <cmath>

namespace bm {

RatioVector ratio_of(const Vector3& a, const Vector3& b) {
  require_non_isotropic(a, "ratio base vector");
  return RatioVector{{b[0] / a[0], b[1] / a[1], b[2] / a[2]}};
}

PairInvariants invariants_of_ratio(const RatioVector& x) {
  return {x[0] + x[1] + x[2], x[0] * x[1] + x[0] * x[2] + x[1] * x[2], x[0] * x[1] * x[2]};
}

PairInvariants pair_invariants(const Vector3& a, const Vector3& b) {
  return invariants_of_ratio(ratio_of(a, b));
}

double delta_of(const RatioVector& p) { return p[0] * p[1] * p[2]; }
double delta1(const RatioVector& p, const RatioVector& q) { return p[1] * q[2] + p[2] * q[1]; }
// The middle cross term pairs the first and third slots: p1 q3 + p3 q1.
double delta2(const RatioVector& p, const RatioVector& q) { return p[0] * q[2] + p[2] * q[0]; }
double delta3(const RatioVector& p, const RatioVector& q) { return p[0] * q[1] + p[1] * q[0]; }
double w1_of(const RatioVector& p) { return p[0] + p[1] + p[2]; }
double w2_of(const RatioVector& p) { return p[0] * p[1] + p[1] * p[2] + p[0] * p[2]; }

RatioVector ratio_quotient(const RatioVector& p, const RatioVector& q) {
  return RatioVector{{p[0] / q[0], p[1] / q[1], p[2] / q[2]}};
}

namespace {

double delta_sum(const RatioVector& p, const RatioVector& q) {
  return delta1(p, q) + delta2(p, q) + delta3(p, q);
}

}  // namespace

double w4(const Vector3& a, const Vector3& b, const Vector3& c) {
  RatioVector xi = ratio_of(a, b), eta = ratio_of(a, c);
  return delta_sum(xi, eta) / 6.0;
}

double QuadInvariantTable::at(const std::string& label) const {
  auto it = entries.find(label);
  if (it == entries.end())
    fail(Errc::invalid_input, "quad table has no entry '" + label + "'");
  return it->second;
}

QuadInvariantTable quad_table(const Vector3& a, const Vector3& b, const Vector3& c,
                              const Vector3& d) {
  require_non_isotropic(a, "quad_table vector a");
  require_non_isotropic(b, "quad_table vector b");
  require_non_isotropic(c, "quad_table vector c");
  require_non_isotropic(d, "quad_table vector d");

  const Vector3* vecs[4] = {&a, &b, &c, &d};
  const char names[4] = {'a', 'b', 'c', 'd'};

  QuadInvariantTable t;
  t.xi = ratio_of(a, b);
  t.eta = ratio_of(a, c);
  t.delta = ratio_of(a, d);

  // Every entry is computed from its own defining ratio vectors so the table
  // identities compare genuinely independent arithmetic routes.
  auto ratio = [&](int base, int other) { return ratio_of(*vecs[base], *vecs[other]); };
  auto label = [&](const char* kind, std::initializer_list<int> idx) {
    std::string s(kind);
    s += '_';
    for (int i : idx) s += names[i];
    return s;
  };

  // w4 entries: the labels printed in the quadruple-invariant list.
  const int w4_triples[][3] = {{0, 1, 2}, {0, 1, 3}, {0, 3, 1}, {0, 2, 3}, {0, 3, 2},
                               {1, 0, 3}, {1, 3, 0}, {2, 0, 3}, {2, 3, 0}, {1, 2, 3},
                               {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 0, 1}, {3, 1, 0},
                               {3, 0, 2}, {3, 2, 0}, {3, 1, 2}, {3, 2, 1}};
  for (const auto& tr : w4_triples) {
    t.entries[label("w4", {tr[0], tr[1], tr[2]})] =
        delta_sum(ratio(tr[0], tr[1]), ratio(tr[0], tr[2])) / 6.0;
  }

  // w3 and w2 entries over every ordered pair.
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      RatioVector r = ratio(i, j);
      t.entries[label("w3", {i, j})] = delta_of(r);
      t.entries[label("w2", {i, j})] = w2_of(r) / 3.0;
    }
  }

  t.entries["delta_xi"] = delta_of(t.xi);
  t.entries["delta_eta"] = delta_of(t.eta);
  t.entries["delta_delta"] = delta_of(t.delta);
  t.entries["w1_xi"] = w1_of(t.xi);
  t.entries["w1_eta"] = w1_of(t.eta);
  t.entries["w1_delta"] = w1_of(t.delta);
  t.entries["w2_xi"] = w2_of(t.xi);
  t.entries["w2_eta"] = w2_of(t.eta);
  t.entries["w2_delta"] = w2_of(t.delta);
  return t;
}

std::vector<TableIdentity> quad_table_identities(const QuadInvariantTable& t) {
  const RatioVector &xi = t.xi, &eta = t.eta, &de = t.delta;
  const double dxi = delta_of(xi), deta = delta_of(eta), ddelta = delta_of(de);

  std::vector<TableIdentity> out;
  auto add = [&](const std::string& name, double lhs, double rhs) {
    out.push_back({name, lhs, rhs});
  };

  // Sixfold w4 sums against the cross-term expressions.
  add("6*w4_abc", 6.0 * t.at("w4_abc"), delta_sum(xi, eta));
  add("6*w4_abd", 6.0 * t.at("w4_abd"), delta_sum(xi, de));
  add("6*w4_acd", 6.0 * t.at("w4_acd"), delta_sum(eta, de));
  add("6*w4_bcd", 6.0 * t.at("w4_bcd"),
      delta_sum(ratio_quotient(eta, xi), ratio_quotient(de, xi)));
  add("6*w4_cbd", 6.0 * t.at("w4_cbd"),
      delta_sum(ratio_quotient(xi, eta), ratio_quotient(de, eta)));
  add("6*w4_dbc", 6.0 * t.at("w4_dbc"),
      delta_sum(ratio_quotient(eta, de), ratio_quotient(xi, de)));

  // Symmetry in the last two arguments.
  add("w4_abd=w4_adb", t.at("w4_abd"), t.at("w4_adb"));
  add("w4_acd=w4_adc", t.at("w4_acd"), t.at("w4_adc"));
  add("w4_bad=w4_bda", t.at("w4_bad"), t.at("w4_bda"));
  add("w4_cad=w4_cda", t.at("w4_cad"), t.at("w4_cda"));
  add("w4_bcd=w4_bdc", t.at("w4_bcd"), t.at("w4_bdc"));
  add("w4_cbd=w4_cdb", t.at("w4_cbd"), t.at("w4_cdb"));
  add("w4_dab=w4_dba", t.at("w4_dab"), t.at("w4_dba"));
  add("w4_dac=w4_dca", t.at("w4_dac"), t.at("w4_dca"));
  add("w4_dbc=w4_dcb", t.at("w4_dbc"), t.at("w4_dcb"));

  // Base-change quotients.
  add("w4_bad*delta_xi=w4_abd", t.at("w4_bad"), t.at("w4_abd") / dxi);
  add("w4_cad*delta_eta=w4_acd", t.at("w4_cad"), t.at("w4_acd") / deta);
  add("w4_dab*delta_delta=w4_abd", t.at("w4_dab"), t.at("w4_abd") / ddelta);
  add("w4_dac*delta_delta=w4_acd", t.at("w4_dac"), t.at("w4_acd") / ddelta);

  // w3 values and reciprocals.
  add("w3_ab=delta_xi", t.at("w3_ab"), dxi);
  add("w3_ac=delta_eta", t.at("w3_ac"), deta);
  add("w3_ad=delta_delta", t.at("w3_ad"), ddelta);
  add("w3_bc=delta_eta/delta_xi", t.at("w3_bc"), deta / dxi);
  add("w3_bd=delta_delta/delta_xi", t.at("w3_bd"), ddelta / dxi);
  add("w3_cd=delta_delta/delta_eta", t.at("w3_cd"), ddelta / deta);
  for (const char* pair : {"ab", "ac", "ad", "bc", "bd", "cd"}) {
    std::string fwd = std::string("w3_") + pair;
    std::string rev = std::string("w3_") + pair[1] + pair[0];
    add(fwd + "*" + rev + "=1", t.at(fwd) * t.at(rev), 1.0);
  }

  // 3*w2 expressions.
  add("3*w2_ab=w2(xi)", 3.0 * t.at("w2_ab"), w2_of(xi));
  add("3*w2_ac=w2(eta)", 3.0 * t.at("w2_ac"), w2_of(eta));
  add("3*w2_ad=w2(delta)", 3.0 * t.at("w2_ad"), w2_of(de));
  add("3*w2_ba=w1(xi)/delta_xi", 3.0 * t.at("w2_ba"), w1_of(xi) / dxi);
  add("3*w2_ca=w1(eta)/delta_eta", 3.0 * t.at("w2_ca"), w1_of(eta) / deta);
  add("3*w2_da=w1(delta)/delta_delta", 3.0 * t.at("w2_da"), w1_of(de) / ddelta);
  add("3*w2_bc=w2(eta/xi)", 3.0 * t.at("w2_bc"), w2_of(ratio_quotient(eta, xi)));
  add("3*w2_cb=w2(xi/eta)", 3.0 * t.at("w2_cb"), w2_of(ratio_quotient(xi, eta)));
  add("3*w2_bd=w2(delta/xi)", 3.0 * t.at("w2_bd"), w2_of(ratio_quotient(de, xi)));
  add("3*w2_db=w2(xi/delta)", 3.0 * t.at("w2_db"), w2_of(ratio_quotient(xi, de)));
  add("3*w2_cd=w2(delta/eta)", 3.0 * t.at("w2_cd"), w2_of(ratio_quotient(de, eta)));
  add("3*w2_dc=w2(eta/delta)", 3.0 * t.at("w2_dc"), w2_of(ratio_quotient(eta, de)));
  return out;
}

double discriminant_sq(const PairInvariants& p) {
  const double w1 = p.w1, w2 = p.w2, w3 = p.w3;
  return -4.0 * w2 * w2 * w2 - 27.0 * w3 * w3 + w1 * w1 * w2 * w2 - 4.0 * w1 * w1 * w1 * w3 +
         18.0 * w1 * w2 * w3;
}

double w_direct(const RatioVector& xi) {
  return (xi[0] - xi[1]) * (xi[1] - xi[2]) * (xi[0] - xi[2]);
}

}  // namespace bm
