#include "trsbound/homology.hpp"

#include <sstream>

#include "trsbound/errors.hpp"

namespace trsbound {

IntMatrix build_D(const Trs& trs, const std::vector<CriticalPeak>& cps, Strategy strategy,
                  long long max_steps) {
  const int n = trs.n_rules();
  const int m = static_cast<int>(cps.size());
  IntMatrix d(n, m);
  for (int i = 0; i < m; ++i) {
    const CriticalPeak& cp = cps[i];
    NormalizationTrace t = normalize_counted(trs, cp.outer_reduct, strategy, max_steps);
    NormalizationTrace s = normalize_counted(trs, cp.inner_reduct, strategy, max_steps);
    if (!(t.normal_form == s.normal_form))
      throw NotCompleteError("critical pair " + std::to_string(i + 1) +
                             " does not join; the system is not complete");
    for (int j = 0; j < n; ++j) {
      long long entry = s.usage[j] - t.usage[j];
      if (cp.inner == j) entry += 1;
      if (cp.outer == j) entry -= 1;
      d(j, i) = entry;
    }
  }
  return d;
}

IntMatrix build_d0(const Signature& sig) {
  IntMatrix d(1, sig.size());
  for (int f = 0; f < sig.size(); ++f) d(0, f) = sig.at(f).arity - 1;
  return d;
}

IntMatrix build_d1(const Trs& trs) {
  const Signature& sig = trs.signature();
  IntMatrix d(sig.size(), trs.n_rules());
  for (int j = 0; j < trs.n_rules(); ++j) {
    std::vector<long long> l = symbol_counts(trs.rule(j).lhs, sig);
    std::vector<long long> r = symbol_counts(trs.rule(j).rhs, sig);
    for (int f = 0; f < sig.size(); ++f) d(f, j) = r[f] - l[f];
  }
  return d;
}

Ring ring_for_degree(long long degree) {
  if (degree == 0) return Ring::integers();
  if (is_prime_number(degree)) return Ring::prime_field(degree);
  std::vector<long long> factors = prime_factors(degree);
  std::ostringstream msg;
  if (degree == 1) {
    msg << "degree 1 is neither 0 nor prime";
  } else {
    msg << "degree " << degree << " is composite (";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) msg << " * ";
      msg << factors[i];
    }
    msg << ")";
  }
  msg << "; no single coefficient ring applies. Re-running the analysis mod each prime "
         "divisor can give exploratory output only, not a theorem-backed bound.";
  throw CompositeDegreeError(degree, factors, msg.str());
}

namespace {

int integer_rank(const IntMatrix& a) { return snf(a).rank; }

/// Columns of v from index `from` on, as a new matrix.
IntMatrix columns_from(const IntMatrix& v, int from) {
  IntMatrix out(v.rows(), v.cols() - from);
  for (int r = 0; r < v.rows(); ++r)
    for (int c = from; c < v.cols(); ++c) out(r, c - from) = v(r, c);
  return out;
}

}  // namespace

int rank_d1_of(const Trs& trs, const Ring& ring) {
  IntMatrix d1 = build_d1(trs);
  return ring.is_field() ? rank_mod_p(d1, ring.p) : integer_rank(d1);
}

int s_of_group(int free_rank, const std::vector<Int>& torsion_divisors) {
  if (free_rank < 0) throw Error("free rank must be non-negative");
  for (const Int& d : torsion_divisors)
    if (d < 2) throw Error("torsion divisors must be >= 2");
  return free_rank + static_cast<int>(torsion_divisors.size());
}

int s_h1_of(const Trs& trs, const Ring& ring) {
  IntMatrix d0 = build_d0(trs.signature());
  IntMatrix d1 = build_d1(trs);
  const int n_sym = trs.signature().size();

  if (ring.is_field()) {
    int nullity = n_sym - rank_mod_p(d0, ring.p);
    return nullity - rank_mod_p(d1, ring.p);
  }

  // Integer kernel basis of d0 from its Smith form: with U*d0*V diagonal of
  // rank r, the last (n_sym - r) columns of V span ker d0, and they extend to
  // a basis of Z^n_sym, so the basis matrix K has all elementary divisors 1.
  SnfResult s0 = snf(d0, true);
  IntMatrix K = columns_from(*s0.right, s0.rank);
  const int k0 = K.cols();

  if (k0 == 0) return 0;
  if (trs.n_rules() == 0) return k0;  // H1 is the whole kernel

  // Express the columns of d1 in the kernel basis: solve K * X = d1 exactly.
  // Using U_K * K * V_K = diag(1,...,1): X = V_K * (U_K * d1) restricted to
  // the first k0 rows; rows beyond k0 of U_K * d1 vanish because im(d1) lies
  // in ker(d0) (chain identity over the selected ring; over Z it is exact).
  SnfResult sk = snf(K, true);
  IntMatrix lifted = (*sk.left) * d1;
  for (int r = sk.rank; r < lifted.rows(); ++r)
    for (int c = 0; c < lifted.cols(); ++c)
      if (lifted(r, c) != 0)
        throw Error("internal error: image of d1 escapes the kernel of d0");
  IntMatrix top(sk.rank, lifted.cols());
  for (int r = 0; r < sk.rank; ++r)
    for (int c = 0; c < lifted.cols(); ++c) {
      if (lifted(r, c) % sk.divisors[r] != 0)
        throw Error("internal error: kernel basis is not primitive");
      top(r, c) = lifted(r, c) / sk.divisors[r];
    }
  IntMatrix x = (*sk.right) * top;  // k0 x n_rules

  // H1 = Z^k0 / im(X): size = free rank + number of torsion factors.
  SnfResult sx = snf(x);
  std::vector<Int> torsion;
  for (const Int& d : sx.divisors)
    if (d > 1) torsion.push_back(d);
  return s_of_group(k0 - sx.rank, torsion);
}

BoundReport analyze(const Trs& trs, const AnalyzeOptions& opts) {
  BoundReport report;
  report.system_name = opts.system_name;
  report.n_rules = trs.n_rules();
  report.n_symbols = trs.signature().size();
  report.strategy = opts.strategy;
  report.max_steps = opts.max_steps;
  report.prime_only = opts.prime_only;

  report.degree = degree(trs);
  report.ring = ring_for_degree(report.degree);

  std::vector<CriticalPeak> cps = critical_pairs(trs);
  report.n_cps_total = static_cast<int>(cps.size());

  // Completeness gate over the full critical-pair list: the bound is only a
  // theorem for complete systems (termination is assumed, joinability is
  // checked here).
  report.completeness.cps_checked = report.n_cps_total;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    Term nf_t = normalize_counted(trs, cps[i].outer_reduct, opts.strategy, opts.max_steps)
                    .normal_form;
    Term nf_s = normalize_counted(trs, cps[i].inner_reduct, opts.strategy, opts.max_steps)
                    .normal_form;
    if (!(nf_t == nf_s)) {
      report.completeness.all_joinable = false;
      throw NotCompleteError("critical pair " + std::to_string(i + 1) + " (rules " +
                             std::to_string(cps[i].outer + 1) + " and " +
                             std::to_string(cps[i].inner + 1) + " at " +
                             position_to_string(cps[i].pos) +
                             ") does not join; the system is not complete");
    }
  }

  if (opts.prime_only) cps = cp_filter_prime(trs, std::move(cps));
  report.n_cps_used = static_cast<int>(cps.size());

  report.D = build_D(trs, cps, opts.strategy, opts.max_steps);
  report.snf_D = snf(report.D, opts.verify_snf);
  if (opts.verify_snf) {
    IntMatrix expected = report.snf_D.diagonal(report.D.rows(), report.D.cols());
    IntMatrix product = (*report.snf_D.left) * report.D * (*report.snf_D.right);
    Int du = report.snf_D.left->determinant();
    Int dv = report.snf_D.right->determinant();
    if (!(product == expected) || (du != 1 && du != -1) || (dv != 1 && dv != -1))
      throw Error("internal error: Smith-form verification failed");
    report.snf_verified = true;
  }

  if (report.ring.is_field()) {
    report.rank_D_mod_p = rank_mod_p(report.D, report.ring.p);
    report.e = e_of(*report.rank_D_mod_p, report.ring);
  } else {
    report.e = e_of(report.snf_D, report.ring);
  }
  report.lower_bound = report.n_rules - report.e;

  report.rank_d1 = rank_d1_of(trs, report.ring);
  report.s_h2 = report.n_rules - report.e - report.rank_d1;
  if (report.s_h2 < 0) throw Error("internal error: negative s(H2)");
  report.s_h1 = s_h1_of(trs, report.ring);
  return report;
}

}  // namespace trsbound
