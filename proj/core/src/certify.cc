#include "hamcert/certify.h"

#include <cmath>
#include <optional>
#include <sstream>

#include "hamcert/json.h"
#include "hamcert/pauli.h"

namespace hamcert {

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::DirectSigmaMin: return "DirectSigmaMin";
    case Criterion::RankCriterion: return "RankCriterion";
    case Criterion::KernelIntersection: return "KernelIntersection";
    case Criterion::StackedLowerBound: return "StackedLowerBound";
    case Criterion::SchurIdentityA: return "SchurIdentityA";
    case Criterion::SchurIdentityBC: return "SchurIdentityBC";
    case Criterion::RangeSurjectivity: return "RangeSurjectivity";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Invertible: return "Invertible";
    case Verdict::Singular: return "Singular";
    case Verdict::Inapplicable: return "Inapplicable";
  }
  return "?";
}

double Certificate::value(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end()) {
    throw InvalidInput("certificate " + std::string(to_string(criterion)) +
                       " has no value '" + key + "'");
  }
  return it->second;
}

ApproxSpectrumWitness make_witness(const ComplexMatrix& h, ComplexVector x) {
  const double nx = x.norm();
  if (nx == 0.0) throw InvalidInput("witness vector must be nonzero");
  x = normalize_phase(x / nx);
  const double residual = (h * x).norm();
  return {std::move(x), residual};
}

namespace {

// Singular values up front; right singular vectors only when a witness or a
// null-space basis is asked for, which invertible instances never do.
class LazySvd {
 public:
  explicit LazySvd(ComplexMatrix m)
      : m_(std::move(m)), values_(singular_values(m_)) {}

  const RealVector& values() const { return values_; }
  double sigma_max() const { return values_.size() ? values_(0) : 0.0; }
  double sigma_min() const {
    return values_.size() ? values_(values_.size() - 1) : 0.0;
  }

  const ComplexMatrix& right_vectors() const {
    if (!v_) v_ = svd(m_).right_vectors;
    return *v_;
  }
  // Right singular vector of the smallest singular value.
  ComplexVector weakest() const { return right_vectors().col(m_.cols() - 1); }
  // Right singular vectors for singular values at or below threshold,
  // counted from values() so the basis matches the rank decision.
  ComplexMatrix null_basis(double threshold) const {
    const auto rank = (values_.array() > threshold).count();
    if (rank == m_.cols()) return ComplexMatrix(m_.cols(), 0);
    return right_vectors().rightCols(m_.cols() - rank);
  }

 private:
  ComplexMatrix m_;
  RealVector values_;
  mutable std::optional<ComplexMatrix> v_;
};

struct StackInfo {
  LazySvd dec;
  bool bounded_below = false;
};

// Shared state for the criteria evaluated on one instance. The SVDs of H and
// of the two column stacks are computed once.
struct Context {
  Context(const HamiltonianBlocks& b, const CertifyOptions& o)
      : blocks(b), opts(o), h(b.assemble()), h_svd(h) {
    if (!(opts.rel_tol > 0.0 && opts.rel_tol < 1.0)) {
      throw InvalidInput("rel_tol must lie in (0, 1)");
    }
  }

  // Every block-level rank decision uses this one gap, scaled by ||H||, so a
  // block that is pure roundoff is not mistaken for a full-rank one.
  double threshold() const { return opts.rel_tol * h_svd.sigma_max(); }

  bool h_bounded_below() const {
    return h_svd.sigma_max() > 0.0 && h_svd.sigma_min() > threshold();
  }

  // 0 in rho(A), rho(B), rho(C) at the shared gap.
  bool zero_in_rho_a() const { return zero_in_rho(block_values(a_s_, blocks.a())); }
  bool zero_in_rho_b() const { return zero_in_rho(block_values(b_s_, blocks.b())); }
  bool zero_in_rho_c() const { return zero_in_rho(block_values(c_s_, blocks.c())); }

  double norm_a() const { return block_values(a_s_, blocks.a())(0); }
  double norm_b() const { return block_values(b_s_, blocks.b())(0); }
  double norm_c() const { return block_values(c_s_, blocks.c())(0); }

  const StackInfo& stack_ac_info() const;
  const StackInfo& stack_ba_info() const;

  const HamiltonianBlocks& blocks;
  CertifyOptions opts;
  ComplexMatrix h;
  LazySvd h_svd;

 private:
  mutable std::optional<StackInfo> ac_;
  mutable std::optional<StackInfo> ba_;
  mutable std::optional<RealVector> a_s_, b_s_, c_s_;

  static const RealVector& block_values(std::optional<RealVector>& memo,
                                        const ComplexMatrix& m) {
    if (!memo) memo = singular_values(m);
    return *memo;
  }
  bool zero_in_rho(const RealVector& s) const {
    return h_svd.sigma_max() > 0.0 && s(s.size() - 1) > threshold();
  }
};

Certificate start(Criterion criterion, const Context& ctx) {
  Certificate cert;
  cert.criterion = criterion;
  cert.tolerances["rel_tol"] = ctx.opts.rel_tol;
  cert.values["sigma_min_H"] = ctx.h_svd.sigma_min();
  cert.values["sigma_max_H"] = ctx.h_svd.sigma_max();
  cert.values["threshold_H"] = ctx.threshold();
  cert.values["hermitian_correction"] = ctx.blocks.hermitian_correction();
  return cert;
}

void attach_witness(Certificate& cert, const ComplexMatrix& h,
                    const ComplexVector& x) {
  const ApproxSpectrumWitness w = make_witness(h, x);
  cert.witnesses["approx_null"] = w.x;
  cert.values["approx_null_residual"] = w.residual;
}

void mark_singular_from_h(Certificate& cert, const Context& ctx) {
  cert.verdict = Verdict::Singular;
  attach_witness(cert, ctx.h, ctx.h_svd.weakest());
}

// Returns false (and marks the certificate Inapplicable) when the
// nonnegativity hypothesis fails and the gate is not bypassed.
bool pass_nonnegativity_gate(Certificate& cert, const Context& ctx) {
  cert.tolerances["psd_tol"] = kPsdTolerance;
  cert.values["lambda_min_B"] = ctx.blocks.lambda_min_b();
  cert.values["lambda_min_C"] = ctx.blocks.lambda_min_c();
  cert.values["gate_bypassed"] = 0.0;
  if (ctx.blocks.nonnegative()) return true;
  if (ctx.opts.bypass_nonnegativity_gate) {
    cert.values["gate_bypassed"] = 1.0;
    cert.notes.push_back(
        "nonnegativity gate bypassed: B or C is indefinite, verdict is "
        "diagnostic only");
    return true;
  }
  std::ostringstream os;
  os << "NonnegativityViolation: lambda_min(B) = " << ctx.blocks.lambda_min_b()
     << ", lambda_min(C) = " << ctx.blocks.lambda_min_c();
  cert.verdict = Verdict::Inapplicable;
  cert.notes.push_back(os.str());
  return false;
}

ComplexMatrix stack_ac(const HamiltonianBlocks& b) {
  ComplexMatrix s(2 * b.n(), b.n());
  s << b.a(), b.c();
  return s;
}

ComplexMatrix stack_ba(const HamiltonianBlocks& b) {
  ComplexMatrix s(2 * b.n(), b.n());
  s << b.b(), -b.a().adjoint();
  return s;
}

// Embeds v as (v; 0) or (0; v) in X x X.
ComplexVector lift(const ComplexVector& v, bool first, Eigen::Index n) {
  ComplexVector x = ComplexVector::Zero(2 * n);
  x.segment(first ? 0 : n, n) = v;
  return x;
}

StackInfo analyze_stack(const ComplexMatrix& stack, double threshold) {
  StackInfo info{LazySvd(stack)};
  info.bounded_below = info.dec.sigma_max() > 0.0 &&
                       info.dec.sigma_min() > threshold;
  return info;
}

const StackInfo& Context::stack_ac_info() const {
  if (!ac_) ac_ = analyze_stack(stack_ac(blocks), threshold());
  return *ac_;
}

const StackInfo& Context::stack_ba_info() const {
  if (!ba_) ba_ = analyze_stack(stack_ba(blocks), threshold());
  return *ba_;
}


Certificate direct(const Context& ctx) {
  Certificate cert = start(Criterion::DirectSigmaMin, ctx);
  if (ctx.h_bounded_below()) {
    cert.verdict = Verdict::Invertible;
  } else {
    mark_singular_from_h(cert, ctx);
  }
  return cert;
}

Certificate rank(const Context& ctx) {
  Certificate cert = start(Criterion::RankCriterion, ctx);
  if (!pass_nonnegativity_gate(cert, ctx)) return cert;
  const HamiltonianBlocks& b = ctx.blocks;
  const Eigen::Index n = b.n();
  const double tol = ctx.threshold();

  ComplexMatrix row1(n, 2 * n), row2(n, 2 * n);
  row1 << b.a().adjoint(), b.c();
  row2 << b.b(), -b.a();
  const int r1 = rank_above(row1, tol);
  const int r2 = rank_above(row2, tol);
  cert.values["n"] = static_cast<double>(n);
  cert.values["rank_AhC"] = r1;
  cert.values["rank_BmA"] = r2;

  // The row blocks are the adjoints of the column stacks since B and C are
  // Hermitian; both readings must agree.
  const StackInfo& s1 = ctx.stack_ac_info();
  const StackInfo& s2 = ctx.stack_ba_info();
  cert.values["sigma_min_AC"] = s1.dec.sigma_min();
  cert.values["sigma_min_BAh"] = s2.dec.sigma_min();
  const bool agree = ((r1 == n) == s1.bounded_below) &&
                     ((r2 == n) == s2.bounded_below);
  cert.values["row_column_agree"] = agree ? 1.0 : 0.0;
  if (!agree) {
    throw ConsistencyFailure(
        "rank of row blocks disagrees with lower bound of column stacks",
        to_json(cert).dump());
  }

  if (r1 == n && r2 == n) {
    cert.verdict = Verdict::Invertible;
  } else {
    cert.verdict = Verdict::Singular;
    const bool first = r1 < n;
    const LazySvd& dec = first ? s1.dec : s2.dec;
    attach_witness(cert, ctx.h, lift(dec.weakest(), first, n));
  }
  return cert;
}

Certificate stacked(const Context& ctx) {
  Certificate cert = start(Criterion::StackedLowerBound, ctx);
  if (!pass_nonnegativity_gate(cert, ctx)) return cert;
  const HamiltonianBlocks& b = ctx.blocks;
  const StackInfo& s1 = ctx.stack_ac_info();
  const StackInfo& s2 = ctx.stack_ba_info();
  cert.values["sigma_min_AC"] = s1.dec.sigma_min();
  cert.values["sigma_max_AC"] = s1.dec.sigma_max();
  cert.values["sigma_min_BAh"] = s2.dec.sigma_min();
  cert.values["sigma_max_BAh"] = s2.dec.sigma_max();
  if (s1.bounded_below && s2.bounded_below) {
    cert.verdict = Verdict::Invertible;
  } else {
    cert.verdict = Verdict::Singular;
    const bool first = !s1.bounded_below;
    const LazySvd& dec = first ? s1.dec : s2.dec;
    attach_witness(cert, ctx.h,
                   lift(dec.weakest(), first, b.n()));
  }
  return cert;
}

Certificate kernels(const Context& ctx) {
  Certificate cert = start(Criterion::KernelIntersection, ctx);
  if (!pass_nonnegativity_gate(cert, ctx)) return cert;
  const HamiltonianBlocks& b = ctx.blocks;
  const Eigen::Index n = b.n();
  const double tol = ctx.threshold();
  cert.tolerances["kernel_residual_tol"] = kKernelResidualTolerance;

  const ComplexMatrix k1 = ctx.stack_ac_info().dec.null_basis(tol);
  const ComplexMatrix k2 = ctx.stack_ba_info().dec.null_basis(tol);
  const ComplexMatrix kh = ctx.h_svd.null_basis(tol);
  cert.values["dim_ker_A_cap_ker_C"] = static_cast<double>(k1.cols());
  cert.values["dim_ker_B_cap_ker_Ah"] = static_cast<double>(k2.cols());
  cert.values["dim_ker_H"] = static_cast<double>(kh.cols());

  ComplexMatrix product(2 * n, k1.cols() + k2.cols());
  product.setZero();
  product.topLeftCorner(n, k1.cols()) = k1;
  product.bottomRightCorner(n, k2.cols()) = k2;
  const double hnorm = ctx.h_svd.sigma_max();
  double worst = 0.0;
  for (Eigen::Index j = 0; j < product.cols(); ++j) {
    const double r = (ctx.h * product.col(j)).norm();
    worst = std::max(worst, hnorm > 0.0 ? r / hnorm : r);
  }
  cert.values["product_residual_max"] = worst;
  const bool factorization = kh.cols() == product.cols() &&
                             worst <= kKernelResidualTolerance;
  cert.values["factorization_holds"] = factorization ? 1.0 : 0.0;
  if (k1.cols() > 0) cert.witnesses["ker_A_cap_ker_C"] = k1;
  if (k2.cols() > 0) cert.witnesses["ker_B_cap_ker_Ah"] = k2;

  if (product.cols() == 0) {
    cert.verdict = Verdict::Invertible;
  } else {
    cert.verdict = Verdict::Singular;
    attach_witness(cert, ctx.h, product.col(0));
  }
  return cert;
}

struct ShiftChoice {
  Complex lambda;
  double condition = 0.0;
};

ComplexMatrix shifted(const ComplexMatrix& m, Complex lambda) {
  ComplexMatrix out = m;
  out.diagonal().array() -= lambda;
  return out;
}

// Explicit shifts must lie in the resolvent set; automatic shifts walk along
// the imaginary axis until the resolvent factor is well conditioned.
// Condition number of m - lambda, or nullopt when lambda is not in the
// resolvent set at relative gap rel_tol.
std::optional<double> resolvent_condition(const ComplexMatrix& m, Complex lambda,
                                          double rel_tol) {
  const RealVector s = singular_values(shifted(m, lambda));
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (!(smax > 0.0) || !(smin > rel_tol * smax)) return std::nullopt;
  return smax / smin;
}

std::optional<ShiftChoice> choose_shift(const ComplexMatrix& m,
                                        std::optional<Complex> requested,
                                        Complex base, Complex step,
                                        double rel_tol, const char* name) {
  if (requested) {
    const auto cond = resolvent_condition(m, *requested, rel_tol);
    if (!cond) {
      std::ostringstream os;
      os << "lambda = " << *requested << " is not in the resolvent set of "
         << name;
      throw LambdaNotInResolvent(os.str());
    }
    return ShiftChoice{*requested, *cond};
  }
  constexpr int kRetries = 8;
  Complex lambda = base;
  for (int attempt = 0; attempt <= kRetries; ++attempt) {
    const auto cond = resolvent_condition(m, lambda, rel_tol);
    if (cond && *cond <= kMaxResolventCondition) return ShiftChoice{lambda, *cond};
    lambda += step;
  }
  return std::nullopt;
}

void judge_schur(Certificate& cert, const Context& ctx, double residual,
                 double tol) {
  if (residual <= tol) {
    cert.verdict = Verdict::Invertible;
    if (!ctx.h_bounded_below()) {
      cert.notes.push_back(
          "identity holds but sigma_min(H) is below the invertibility "
          "threshold; the direct criterion decides");
    }
    return;
  }
  cert.notes.push_back(
      "self-adjointness identity violated beyond tolerance; this is a "
      "numerical red flag in finite dimensions");
  mark_singular_from_h(cert, ctx);
}

Certificate schur_a(const Context& ctx) {
  Certificate cert = start(Criterion::SchurIdentityA, ctx);
  if (!pass_nonnegativity_gate(cert, ctx)) return cert;
  const HamiltonianBlocks& b = ctx.blocks;
  const double tol = ctx.opts.rel_tol;
  const bool zero_in_rho_a = ctx.zero_in_rho_a();
  const bool zero_in_rho_bc = ctx.zero_in_rho_b() && ctx.zero_in_rho_c();
  cert.values["zero_in_rho_A"] = zero_in_rho_a ? 1.0 : 0.0;
  cert.values["zero_in_rho_B_and_rho_C"] = zero_in_rho_bc ? 1.0 : 0.0;
  if (!zero_in_rho_a && !zero_in_rho_bc) {
    cert.verdict = Verdict::Inapplicable;
    cert.notes.push_back(
        "HypothesisNotMet: 0 is neither in rho(A) nor in rho(B) n rho(C)");
    return cert;
  }

  const double base = 1.0 + ctx.norm_a();
  const auto choice = choose_shift(b.a(), ctx.opts.lambda, Complex(0.0, base),
                                   Complex(0.0, 0.5 * base), tol, "A");
  if (!choice) {
    cert.verdict = Verdict::Inapplicable;
    cert.notes.push_back("no well-conditioned shift found for A - lambda");
    return cert;
  }
  const Complex lambda = choice->lambda;
  const Eigen::Index n = b.n();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix s1 =
      b.a().adjoint() + lambda * id + b.c() * solve(shifted(b.a(), lambda), b.b());
  const ComplexMatrix s2 =
      b.a() + std::conj(lambda) * id +
      b.b() * solve(shifted(b.a().adjoint(), std::conj(lambda)), b.c());
  const double r2 = (s1 - s2.adjoint()).norm();
  const double r3 = (s2 - s1.adjoint()).norm();
  const double bound = kSchurTolerance * (1.0 + s1.norm());

  cert.tolerances["schur_tol"] = kSchurTolerance;
  cert.tolerances["max_resolvent_condition"] = kMaxResolventCondition;
  cert.values["lambda_re"] = lambda.real();
  cert.values["lambda_im"] = lambda.imag();
  cert.values["resolvent_condition"] = choice->condition;
  cert.values["residual_variant2"] = r2;
  cert.values["residual_variant3"] = r3;
  cert.values["residual_bound"] = bound;
  judge_schur(cert, ctx, std::max(r2, r3), bound);
  return cert;
}

Certificate schur_bc(const Context& ctx) {
  Certificate cert = start(Criterion::SchurIdentityBC, ctx);
  if (!pass_nonnegativity_gate(cert, ctx)) return cert;
  const HamiltonianBlocks& b = ctx.blocks;
  const double tol = ctx.opts.rel_tol;
  const bool zero_in_rho_b = ctx.zero_in_rho_b();
  const bool zero_in_rho_c = ctx.zero_in_rho_c();
  cert.values["zero_in_rho_B"] = zero_in_rho_b ? 1.0 : 0.0;
  cert.values["zero_in_rho_C"] = zero_in_rho_c ? 1.0 : 0.0;
  if (!zero_in_rho_b || !zero_in_rho_c) {
    cert.verdict = Verdict::Inapplicable;
    cert.notes.push_back("HypothesisNotMet: 0 is not in rho(B) n rho(C)");
    return cert;
  }

  // Negative shifts are resolvent points of the nonnegative B and C.
  const double base_b = 1.0 + ctx.norm_b();
  const double base_c = 1.0 + ctx.norm_c();
  const auto choice_b = choose_shift(b.b(), ctx.opts.lambda, Complex(-base_b),
                                     Complex(-0.5 * base_b), tol, "B");
  const auto choice_c = choose_shift(b.c(), ctx.opts.lambda, Complex(-base_c),
                                     Complex(-0.5 * base_c), tol, "C");
  if (!choice_b || !choice_c) {
    cert.verdict = Verdict::Inapplicable;
    cert.notes.push_back("no well-conditioned shift found for B or C");
    return cert;
  }
  const Eigen::Index n = b.n();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix ah = b.a().adjoint();

  const Complex lb = choice_b->lambda;
  const ComplexMatrix s1 = b.c() + lb * id + ah * solve(shifted(b.b(), lb), b.a());
  const ComplexMatrix s2 = b.c() + std::conj(lb) * id +
                           ah * solve(shifted(b.b(), std::conj(lb)), b.a());
  const double r2 = (s1 - s2.adjoint()).norm();

  const Complex lc = choice_c->lambda;
  const ComplexMatrix t1 = b.b() + lc * id + b.a() * solve(shifted(b.c(), lc), ah);
  const ComplexMatrix t2 = b.b() + std::conj(lc) * id +
                           b.a() * solve(shifted(b.c(), std::conj(lc)), ah);
  const double r3 = (t1 - t2.adjoint()).norm();

  const double bound2 = kSchurTolerance * (1.0 + s1.norm());
  const double bound3 = kSchurTolerance * (1.0 + t1.norm());
  cert.tolerances["schur_tol"] = kSchurTolerance;
  cert.values["lambda_B"] = lb.real();
  cert.values["lambda_C"] = lc.real();
  cert.values["residual_variant2"] = r2;
  cert.values["residual_variant3"] = r3;
  cert.values["residual_bound_variant2"] = bound2;
  cert.values["residual_bound_variant3"] = bound3;
  if (ctx.opts.lambda) {
    cert.values["lambda_B_im"] = lb.imag();
    cert.values["lambda_C_im"] = lc.imag();
  }
  // Scale-free worst case so a single comparison decides.
  judge_schur(cert, ctx, std::max(r2 / bound2, r3 / bound3), 1.0);
  return cert;
}

Certificate range_shift(const Context& ctx) {
  Certificate cert = start(Criterion::RangeSurjectivity, ctx);
  if (!pass_nonnegativity_gate(cert, ctx)) return cert;
  const ComplexMatrix shifted_h = ctx.h + pauli(PauliIndex(1), ctx.blocks.n());
  const RealVector s = singular_values(shifted_h);
  const double smin = s(s.size() - 1);
  const double smax = s(0);
  const bool surjective = smin > ctx.opts.rel_tol * smax;
  const bool bound = smin >= 1.0 - kShiftBoundSlack;
  cert.tolerances["shift_bound_slack"] = kShiftBoundSlack;
  cert.values["sigma_min_H_plus_sigma1"] = smin;
  cert.values["sigma_max_H_plus_sigma1"] = smax;
  cert.values["range_is_full"] = surjective ? 1.0 : 0.0;
  cert.values["shift_bound_holds"] = bound ? 1.0 : 0.0;
  if (!bound) {
    cert.notes.push_back(
        "sigma_min(H + sigma_1) < 1 for nonnegative blocks: input data is "
        "corrupt or the gate was bypassed");
  }
  if (surjective && ctx.h_bounded_below()) {
    cert.verdict = Verdict::Invertible;
  } else {
    mark_singular_from_h(cert, ctx);
  }
  return cert;
}

}  // namespace

Certificate certify_direct(const HamiltonianBlocks& blocks,
                           const CertifyOptions& opts) {
  return direct(Context(blocks, opts));
}

Certificate certify_rank(const HamiltonianBlocks& blocks,
                         const CertifyOptions& opts) {
  return rank(Context(blocks, opts));
}

Certificate certify_stacked(const HamiltonianBlocks& blocks,
                            const CertifyOptions& opts) {
  return stacked(Context(blocks, opts));
}

Certificate certify_kernels(const HamiltonianBlocks& blocks,
                            const CertifyOptions& opts) {
  return kernels(Context(blocks, opts));
}

Certificate certify_schur_a(const HamiltonianBlocks& blocks,
                            const CertifyOptions& opts) {
  return schur_a(Context(blocks, opts));
}

Certificate certify_schur_bc(const HamiltonianBlocks& blocks,
                             const CertifyOptions& opts) {
  return schur_bc(Context(blocks, opts));
}

Certificate certify_range_shift(const HamiltonianBlocks& blocks,
                                const CertifyOptions& opts) {
  return range_shift(Context(blocks, opts));
}

std::vector<Certificate> certify_each(const HamiltonianBlocks& blocks,
                                      const CertifyOptions& opts) {
  const Context ctx(blocks, opts);
  return {direct(ctx),  rank(ctx),     stacked(ctx),    kernels(ctx),
          schur_a(ctx), schur_bc(ctx), range_shift(ctx)};
}

std::optional<std::string> find_inconsistency(
    const std::vector<Certificate>& certs) {
  const Certificate* reference = nullptr;
  for (const Certificate& c : certs) {
    if (!c.applicable()) continue;
    if (reference == nullptr) {
      reference = &c;
    } else if (c.verdict != reference->verdict) {
      return std::string(to_string(c.criterion)) + " says " +
             std::string(to_string(c.verdict)) + " but " +
             std::string(to_string(reference->criterion)) + " says " +
             std::string(to_string(reference->verdict));
    }
    if (c.criterion == Criterion::KernelIntersection &&
        !c.flag("factorization_holds")) {
      return std::string("kernel factorization N(H) = (N(A) n N(C)) x "
                         "(N(B) n N(A^H)) fails");
    }
    if (c.criterion == Criterion::RangeSurjectivity &&
        !c.flag("shift_bound_holds")) {
      return std::string("sigma_min(H + sigma_1) >= 1 fails");
    }
  }
  return std::nullopt;
}

std::vector<Certificate> certify_all(const HamiltonianBlocks& blocks,
                                     const CertifyOptions& opts) {
  std::vector<Certificate> certs = certify_each(blocks, opts);
  if (auto problem = find_inconsistency(certs)) {
    nlohmann::json dump = nlohmann::json::array();
    for (const Certificate& c : certs) dump.push_back(to_json(c));
    throw ConsistencyFailure("criteria disagree: " + *problem, dump.dump(2));
  }
  return certs;
}

Verdict overall_verdict(const std::vector<Certificate>& certs) {
  for (const Certificate& c : certs) {
    if (c.applicable()) return c.verdict;
  }
  return Verdict::Inapplicable;
}

}  // namespace hamcert
