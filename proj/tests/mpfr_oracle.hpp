#pragma once

// High-precision numeric oracle used by tests. Independent of the exact code
// paths: values are evaluated with MPFR interval bounds (round down / round up).

#include <mpfr.h>

#include "geodom/exactnum.hpp"

namespace oracle {

struct Interval {
    mpfr_t lo, hi;
    explicit Interval(mpfr_prec_t prec) {
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
    }
    ~Interval() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    Interval(const Interval&) = delete;
    Interval& operator=(const Interval&) = delete;
};

// Encloses (p + q*sqrt(s)) / r in [out.lo, out.hi].
inline void enclose(const geodom::SqrtExpr& e, Interval& out, mpfr_prec_t prec) {
    mpfr_t sl, sh, t;
    mpfr_inits2(prec, sl, sh, t, (mpfr_ptr)0);
    mpfr_set_q(sl, e.s.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(sh, e.s.get_mpq_t(), MPFR_RNDU);
    mpfr_sqrt(sl, sl, MPFR_RNDD);
    mpfr_sqrt(sh, sh, MPFR_RNDU);
    // fold the division by r into the coefficients exactly
    geodom::Rational qq = e.q / e.r;
    geodom::Rational pp = e.p / e.r;
    if (qq >= 0) {
        mpfr_mul_q(out.lo, sl, qq.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(out.hi, sh, qq.get_mpq_t(), MPFR_RNDU);
    } else {
        mpfr_mul_q(out.lo, sh, qq.get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(out.hi, sl, qq.get_mpq_t(), MPFR_RNDU);
    }
    mpfr_add_q(out.lo, out.lo, pp.get_mpq_t(), MPFR_RNDD);
    mpfr_add_q(out.hi, out.hi, pp.get_mpq_t(), MPFR_RNDU);
    mpfr_clears(sl, sh, t, (mpfr_ptr)0);
}

// Sign of a QuadNum at the given precision; 2 when the interval contains zero
// without being the exact zero.
inline int sign(const geodom::QuadNum& x, mpfr_prec_t prec) {
    if (x.rat() == 0 && x.irr() == 0) return 0;
    Interval iv(prec);
    enclose(geodom::SqrtExpr{x.rat(), x.irr(), 1, geodom::Rational(x.field())}, iv, prec);
    if (mpfr_sgn(iv.lo) > 0) return 1;
    if (mpfr_sgn(iv.hi) < 0) return -1;
    return 2;
}

// Compare two expressions at ~100 decimal digits; 2 when undecided.
inline int compare(const geodom::SqrtExpr& a, const geodom::SqrtExpr& b, mpfr_prec_t prec = 340) {
    Interval ia(prec), ib(prec);
    enclose(a, ia, prec);
    enclose(b, ib, prec);
    if (mpfr_less_p(ia.hi, ib.lo)) return -1;
    if (mpfr_greater_p(ia.lo, ib.hi)) return 1;
    if (mpfr_equal_p(ia.lo, ia.hi) && mpfr_equal_p(ib.lo, ib.hi) && mpfr_equal_p(ia.lo, ib.lo))
        return 0;
    return 2;
}

}  // namespace oracle
