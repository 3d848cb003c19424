#include "apery/operator/sequences.hpp"

#include <algorithm>
#include <cmath>

namespace apery::op {

namespace {

Integer to_integer(const Rational &r)
{
    if (r.get_den() != 1)
        throw OperatorError("internal: scaled coefficient is not integral");
    return r.get_num();
}

Integer ipow(const Integer &base, int e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Real rational_real(const Rational &r, Precision prec) { return Real(r, prec); }

} // namespace

Rational SequenceRun::a(std::size_t m) const
{
    if (!is_exact(m))
        throw OperatorError("a_" + std::to_string(m) + " lies beyond the exact range");
    Rational r(va_[m], scale_[m]);
    r.canonicalize();
    return r;
}

Rational SequenceRun::b(std::size_t m) const
{
    if (!is_exact(m))
        throw OperatorError("b_" + std::to_string(m) + " lies beyond the exact range");
    Rational r(vb_[m], scale_[m]);
    r.canonicalize();
    return r;
}

Real SequenceRun::a_hp(std::size_t m, Precision prec) const
{
    if (m >= size_)
        throw OperatorError("index beyond the computed range");
    if (is_exact(m))
        return Real(va_[m], prec + 32) / Real(scale_[m], prec + 32);
    return fa_[m - exact_top_ - 1].with_precision(prec);
}

Real SequenceRun::b_hp(std::size_t m, Precision prec) const
{
    if (m >= size_)
        throw OperatorError("index beyond the computed range");
    if (is_exact(m))
        return Real(vb_[m], prec + 32) / Real(scale_[m], prec + 32);
    return fb_[m - exact_top_ - 1].with_precision(prec);
}

Real SequenceRun::ratio(std::size_t m, Precision prec) const
{
    if (m >= size_)
        throw OperatorError("index beyond the computed range");
    if (is_exact(m)) {
        if (va_[m] == 0)
            throw OperatorError("a_" + std::to_string(m) + " vanishes");
        return Real(vb_[m], prec) / Real(va_[m], prec);
    }
    const Real &a = fa_[m - exact_top_ - 1];
    if (a.is_zero())
        throw OperatorError("a_" + std::to_string(m) + " vanishes");
    return (fb_[m - exact_top_ - 1] / a).with_precision(prec);
}

Rational SequenceRun::ratio_exact(std::size_t m) const
{
    if (!is_exact(m))
        throw OperatorError("ratio beyond the exact range");
    if (va_[m] == 0)
        throw OperatorError("a_" + std::to_string(m) + " vanishes");
    Rational r(vb_[m], va_[m]);
    r.canonicalize();
    return r;
}

SequenceRun run_sequences(const Recurrence &rec, std::size_t N, const SequenceOptions &opts)
{
    const int d = rec.degree();
    const int k = rec.order;
    SequenceRun run;
    run.size_ = N + 1;
    int v = rec.rhs.valuation();
    run.source_index_ = v < 0 ? 0 : static_cast<std::size_t>(v);

    // Clear denominators: D m^order u_m = D rhs_m - sum_j D Q_j(m) u_{m-j}.
    std::vector<Rational> all;
    for (int j = 1; j <= d; ++j)
        for (const auto &c : rec.terms[j].coeffs())
            all.push_back(c);
    for (const auto &c : rec.rhs.coeffs())
        all.push_back(c);
    const Integer D = series::common_denominator(all);
    std::vector<Poly> Q;
    for (int j = 0; j <= d; ++j)
        Q.push_back(rec.terms[j] * Rational(D));
    const Poly rhs = rec.rhs * Rational(D);

    const std::size_t top = std::min(N, opts.exact_limit);
    run.exact_top_ = top;
    run.va_.assign(top + 1, 0);
    run.vb_.assign(top + 1, 0);
    run.scale_.assign(top + 1, 1);
    run.va_[0] = 1;
    run.vb_[0] = 0;
    // With v_m = u_m W_m: v_m = rhs'_m W_{m-1} - sum_j Q'_j(m) v_{m-j} prod_{i=m-j+1}^{m-1} D i^order.
    for (std::size_t m = 1; m <= top; ++m) {
        Integer mm(static_cast<unsigned long>(m));
        run.scale_[m] = run.scale_[m - 1] * D * ipow(mm, k);
        Integer acc_a = 0, acc_b = 0;
        Integer gap = 1;
        for (int j = 1; j <= d && static_cast<std::size_t>(j) <= m; ++j) {
            if (j >= 2)
                gap *= D * ipow(Integer(static_cast<unsigned long>(m - j + 1)), k);
            Integer q = to_integer(Q[j](Rational(mm)));
            if (q == 0)
                continue;
            Integer f = q * gap;
            acc_a += f * run.va_[m - j];
            acc_b += f * run.vb_[m - j];
        }
        Integer src = to_integer(rhs.coeff(static_cast<int>(m)));
        run.va_[m] = -acc_a;
        run.vb_[m] = src * run.scale_[m - 1] - acc_b;
    }

    if (N <= top) {
        run.float_prec_ = 0;
        return run;
    }

    double rho = singularity_ratio(rec.characteristic());
    Precision need = static_cast<Precision>(std::ceil(static_cast<double>(N) * std::log2(std::max(rho, 1.0)))) + 64;
    const Precision prec = std::max(opts.float_prec, need);
    run.float_prec_ = prec;

    auto step = [&](const std::vector<Real> &ua, const std::vector<Real> &ub, std::size_t base, std::size_t m,
                    Real &out_a, Real &out_b) {
        // ua[i], ub[i] hold u_{base+i}.
        Rational mm(static_cast<long>(m));
        Real sa(prec), sb(prec);
        for (int j = 1; j <= d && static_cast<std::size_t>(j) <= m; ++j) {
            Rational q = rec.terms[j](mm);
            if (q == 0)
                continue;
            Real qr = rational_real(q, prec);
            sa += qr * ua[m - j - base];
            sb += qr * ub[m - j - base];
        }
        Real lead = rational_real(rec.terms[0](mm), prec);
        Real src = rational_real(rec.rhs.coeff(static_cast<int>(m)), prec);
        out_a = (-sa) / lead;
        out_b = (src - sb) / lead;
    };

    // Cross-check: seed d values ending d steps before the switchover and
    // march forward to the switchover index.
    if (top >= static_cast<std::size_t>(2 * d)) {
        std::size_t base = top - 2 * static_cast<std::size_t>(d) + 1;
        std::vector<Real> ua, ub;
        for (std::size_t m = base; m < base + static_cast<std::size_t>(d); ++m) {
            ua.push_back(run.a_hp(m, prec));
            ub.push_back(run.b_hp(m, prec));
        }
        double worst = 0;
        for (std::size_t m = base + static_cast<std::size_t>(d); m <= top; ++m) {
            Real na(prec), nb(prec);
            step(ua, ub, base, m, na, nb);
            ua.push_back(na);
            ub.push_back(nb);
            Real ea = run.a_hp(m, prec), eb = run.b_hp(m, prec);
            for (auto [x, y] : {std::pair<const Real *, const Real *>{&na, &ea}, {&nb, &eb}}) {
                if (y->is_zero())
                    continue;
                double rel = analytic::abs((*x - *y) / *y).to_double();
                worst = std::max(worst, rel);
            }
        }
        run.switchover_residual_ = worst;
    } else {
        run.switchover_residual_ = 0.0;
    }

    // Continuation from the exact tail.
    std::size_t base = top + 1 - std::min<std::size_t>(static_cast<std::size_t>(d), top + 1);
    std::vector<Real> ua, ub;
    for (std::size_t m = base; m <= top; ++m) {
        ua.push_back(run.a_hp(m, prec));
        ub.push_back(run.b_hp(m, prec));
    }
    for (std::size_t m = top + 1; m <= N; ++m) {
        Real na(prec), nb(prec);
        step(ua, ub, base, m, na, nb);
        ua.push_back(na);
        ub.push_back(nb);
    }
    for (std::size_t m = top + 1; m <= N; ++m) {
        run.fa_.push_back(std::move(ua[m - base]));
        run.fb_.push_back(std::move(ub[m - base]));
    }
    return run;
}

SequencePair exact_sequences(const Recurrence &rec, std::size_t N)
{
    SequenceOptions opts;
    opts.exact_limit = std::max(opts.exact_limit, N);
    auto run = run_sequences(rec, N, opts);
    SequencePair out;
    out.j = run.source_index();
    for (std::size_t m = 0; m <= N; ++m) {
        out.a.push_back(run.a(m));
        out.b.push_back(run.b(m));
    }
    return out;
}

} // namespace apery::op
