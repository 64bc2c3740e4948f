#pragma once

// Independent oracles. Nothing here calls into the library's polynomial
// code: Euler characteristics come from Hirzebruch-Riemann-Roch with the
// Todd class of X written out term by term, and surds are evaluated in
// 400-bit binary floating point (about 120 decimal digits).

#include <cstdint>
#include <string>

#include <gmpxx.h>
#include <mpfr.h>

namespace oracle {

// td(X) = 1 + c1(X)/2 + (c1(X)^2 + c2(X))/12 + c1(X) c2(X)/24 with c1(X) = -eps H,
// H^3 = d, c2(X).H = tau.
inline mpq_class chi_line(std::int64_t d, std::int64_t eps, std::int64_t tau, std::int64_t n) {
  const mpq_class D(static_cast<long>(d)), E(static_cast<long>(eps)), T(static_cast<long>(tau)),
      N(static_cast<long>(n));
  const mpq_class td1 = -E / 2;                 // times H
  const mpq_class td2 = (E * E * D + T) / 12;   // degree of the H-part of td2
  const mpq_class td3 = (-E * T) / 24;
  mpq_class chi = td3 + N * td2 + N * N / 2 * D * td1 + N * N * N * D / 6;
  chi.canonicalize();
  return chi;
}

// Rank 2, c1(E(n)) = (c1 + 2n) H, c2(E(n)).H = c2 + (c1 n + n^2) d, c3 = 0.
inline mpq_class chi_rank2(std::int64_t d, std::int64_t eps, std::int64_t tau, std::int64_t c1, std::int64_t c2,
                           std::int64_t n) {
  const mpq_class D(static_cast<long>(d)), E(static_cast<long>(eps)), T(static_cast<long>(tau));
  const mpq_class C1(static_cast<long>(c1 + 2 * n));
  const mpq_class C2 = mpq_class(static_cast<long>(c2)) +
                       mpq_class(static_cast<long>(c1)) * static_cast<long>(n) * D +
                       mpq_class(static_cast<long>(n)) * static_cast<long>(n) * D;
  const mpq_class ch3 = (C1 * C1 * C1 * D - 3 * C1 * C2) / 6;
  const mpq_class ch2_td1 = (C1 * C1 * D - 2 * C2) * (-E) / 4;
  const mpq_class c1_td2 = C1 * (E * E * D + T) / 12;
  const mpq_class rank_td3 = 2 * (-E * T) / 24;
  mpq_class chi = ch3 + ch2_td1 + c1_td2 + rank_td3;
  chi.canonicalize();
  return chi;
}

class BigFloat {
 public:
  static constexpr mpfr_prec_t kBits = 400;
  BigFloat() { mpfr_init2(v_, kBits); }
  explicit BigFloat(const mpq_class& q) : BigFloat() { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
  BigFloat(const BigFloat&) = delete;
  BigFloat& operator=(const BigFloat&) = delete;
  ~BigFloat() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// Values within this distance count as equal. Distinct values in the test
// ranges differ by far more (|r - m^2| / (sqrt r + m) with small denominators).
inline const char* kTie = "1e-100";

// base + sqrt(radicand) into out.
inline void surd_value(const mpq_class& base, const mpq_class& radicand, BigFloat& out) {
  BigFloat r(radicand), b(base);
  mpfr_sqrt(out.get(), r.get(), MPFR_RNDN);
  mpfr_add(out.get(), out.get(), b.get(), MPFR_RNDN);
}

// -1, 0, 1 as x <, =, > base + sqrt(radicand).
inline int surd_cmp(const mpq_class& x, const mpq_class& base, const mpq_class& radicand) {
  BigFloat s, diff, tie;
  surd_value(base, radicand, s);
  BigFloat xv(x);
  mpfr_sub(diff.get(), xv.get(), s.get(), MPFR_RNDN);
  mpfr_set_str(tie.get(), kTie, 10, MPFR_RNDN);
  if (mpfr_cmpabs(diff.get(), tie.get()) <= 0) return 0;
  return mpfr_sgn(diff.get()) < 0 ? -1 : 1;
}

inline mpz_class floor_surd(const mpq_class& base, const mpq_class& radicand) {
  BigFloat s, tie;
  surd_value(base, radicand, s);
  mpfr_set_str(tie.get(), kTie, 10, MPFR_RNDN);
  mpfr_add(s.get(), s.get(), tie.get(), MPFR_RNDN);
  mpfr_floor(s.get(), s.get());
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), s.get(), MPFR_RNDN);
  return out;
}

}  // namespace oracle
