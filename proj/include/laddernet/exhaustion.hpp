#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "dirichlet.hpp"
#include "infinite_ladder.hpp"
#include "ladder.hpp"
#include "network.hpp"

namespace laddernet {

// How each finite-depth admittance is produced: the closed form in the
// characteristic root, or a full Dirichlet solve on the assembled network.
enum class SequenceSource { ClosedForm, DirichletSolve };

// P_n for n = 1..n_max at a fixed spectral point. A term with no value marks
// a depth where the Dirichlet problem is inconsistent (P_n = infinity).
struct AdmittanceSequence {
    Complex lambda;
    SequenceSource source;
    struct Term {
        int n;
        std::optional<Complex> p;
    };
    std::vector<Term> terms;
};

inline AdmittanceSequence exhaust(const LadderSpec& spec, ComplexParam lambda,
                                  int n_max,
                                  SequenceSource source = SequenceSource::ClosedForm) {
    if (n_max < 2) throw invalid_size_error("need at least two ladder depths");
    // One probe confirms lambda keeps every edge kind invertible.
    require_in_lambda_set(build_ladder(spec, 2), lambda);

    AdmittanceSequence seq{lambda.value(), source, {}};
    seq.terms.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        std::optional<Complex> p;
        if (source == SequenceSource::ClosedForm) {
            try {
                p = finite_ladder_admittance(spec.alpha_at(lambda),
                                             spec.beta_at(lambda), n);
            } catch (const unit_circle_degeneracy_error&) {
                p = std::nullopt;
            }
        } else {
            const AdmittanceResult r =
                effective_admittance(build_ladder(spec, n), lambda);
            p = r.value;
        }
        seq.terms.push_back({n, p});
    }
    return seq;
}

enum class ConvergenceStatus { Converged, Oscillating, Slow };

struct ConvergenceVerdict {
    ConvergenceStatus status;
    std::optional<Complex> estimated_limit;
    double estimated_rate;  // |P_{n+1} - P_n| shrink factor, 0 when settled
};

namespace detail {

// Geometric rate from the tail of the difference sequence, ignoring entries
// indistinguishable from rounding noise at the sequence's own scale.
inline double rate_from_diffs(const std::vector<double>& d, double floor) {
    int j = -1;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) {
        if (std::isfinite(d[i]) && d[i] > floor) {
            j = i;
            break;
        }
    }
    if (j < 0) return 0.0;
    if (j >= 2 && std::isfinite(d[j - 1]) && d[j - 1] > floor &&
        std::isfinite(d[j - 2]) && d[j - 2] > floor)
        return std::sqrt(d[j] / d[j - 2]);
    if (j >= 1 && std::isfinite(d[j - 1]) && d[j - 1] > floor)
        return d[j] / d[j - 1];
    return 0.0;
}

}  // namespace detail

// Inspect the tail of successive differences. Converged: finite tail, no
// real growth, final step at or below tol. Oscillating: an infinite term in
// the tail, or a non-monotone tail whose swing exceeds two orders. Anything
// else is Slow.
inline ConvergenceVerdict diagnose(const AdmittanceSequence& seq,
                                   double tol = 1e-9) {
    const std::size_t count = seq.terms.size();
    if (count < 4) throw too_few_terms_error("need at least four terms");

    std::vector<double> diffs(count - 1);
    const double inf = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < count; ++i) {
        const auto& a = seq.terms[i].p;
        const auto& b = seq.terms[i + 1].p;
        diffs[i] = (a && b) ? std::abs(*b - *a) : inf;
    }

    double scale = 1.0;
    if (seq.terms.back().p)
        scale = std::max(1.0, std::abs(*seq.terms.back().p));
    const double floor =
        256.0 * std::numeric_limits<double>::epsilon() * scale;

    const std::size_t tail_len = std::min<std::size_t>(5, diffs.size());
    const std::size_t start = diffs.size() - tail_len;

    bool tail_finite = true;
    double hi = 0.0, lo = inf;
    for (std::size_t i = start; i < diffs.size(); ++i) {
        if (!std::isfinite(diffs[i])) tail_finite = false;
        hi = std::max(hi, diffs[i]);
        lo = std::min(lo, diffs[i]);
    }

    bool monotone = true;
    for (std::size_t i = start; i + 1 < diffs.size(); ++i) {
        // Growth only counts once it clears both the predecessor and tol.
        if (diffs[i + 1] > std::max(diffs[i], tol)) monotone = false;
    }

    const double rate = detail::rate_from_diffs(diffs, floor);

    if (tail_finite && monotone && diffs.back() <= tol)
        return {ConvergenceStatus::Converged, seq.terms.back().p, rate};
    if (!tail_finite || (!monotone && hi > 100.0 * lo))
        return {ConvergenceStatus::Oscillating, std::nullopt, rate};
    return {ConvergenceStatus::Slow, std::nullopt, rate};
}

// Error-versus-bound table for |P_n - P|: bound = K |psi1|^{2n} with K
// fitted at the first row. Rows below double precision at the limit's scale
// are flagged not resolvable; ratio tests should skip them.
struct RateReport {
    struct Row {
        int n;
        double error;
        double bound;
        bool resolvable;
    };
    std::vector<Row> rows;
    Complex limit;
    double psi1_mod;
    double k;
};

inline RateReport verify_rate(const LadderSpec& spec, ComplexParam lambda,
                              int n_from, int n_to) {
    if (n_from < 1 || n_to < n_from)
        throw invalid_size_error("need 1 <= n_from <= n_to");

    Complex limit;
    Complex psi1;
    if (spec.kind() == LadderSpec::Kind::LC) {
        const auto r =
            lc_infinite_admittance(lambda, spec.inductance(), spec.capacitance());
        if (!r.convergent())
            throw non_convergent_input_error("no infinite-depth limit here");
        limit = *r.value;
        psi1 = r.psi1;
    } else if (spec.kind() == LadderSpec::Kind::CL) {
        const auto r =
            cl_infinite_admittance(lambda, spec.inductance(), spec.capacitance());
        if (!r.convergent())
            throw non_convergent_input_error("no infinite-depth limit here");
        limit = *r.value;
        psi1 = r.psi1;
    } else {
        const Complex alpha = spec.alpha_at(lambda);
        const Complex beta = spec.beta_at(lambda);
        const CharRoots roots =
            characteristic_roots(detail::ladder_mu(alpha, beta));
        if (roots.degenerate) {
            limit = 2.0 * alpha;  // alpha (2n-1)/n settles here
            psi1 = roots.psi1;
        } else {
            if (std::abs(std::abs(roots.psi1) - 1.0) <= 1e-9)
                throw non_convergent_input_error("characteristic root is unimodular");
            limit = alpha * (1.0 - roots.psi1);
            psi1 = roots.psi1;
        }
    }

    RateReport report;
    report.limit = limit;
    report.psi1_mod = std::abs(psi1);

    const double floor = 256.0 * std::numeric_limits<double>::epsilon() *
                         std::max(1.0, std::abs(limit));
    const double mod2 = report.psi1_mod * report.psi1_mod;

    double k = 0.0;
    double decay = std::pow(mod2, n_from);
    for (int n = n_from; n <= n_to; ++n) {
        const Complex pn = finite_ladder_admittance(spec.alpha_at(lambda),
                                                    spec.beta_at(lambda), n);
        const double err = std::abs(pn - limit);
        if (n == n_from && decay > 0.0) k = err / decay;
        report.rows.push_back({n, err, k * decay, err > floor});
        decay *= mod2;
    }
    report.k = k;
    return report;
}

}  // namespace laddernet
