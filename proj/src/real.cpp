#include "srpm/real.hpp"

#include "srpm/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <string>

namespace srp {

namespace {

thread_local mpfr_prec_t g_working_precision = 128;

template <class Fn>
const Real& cached_constant(std::map<mpfr_prec_t, Real>& cache, std::mutex& mutex, Fn&& compute)
{
    const mpfr_prec_t bits = working_precision();
    std::lock_guard lock(mutex);
    auto it = cache.find(bits);
    if (it == cache.end()) {
        Real value;
        compute(value.get());
        it = cache.emplace(bits, std::move(value)).first;
    }
    return it->second;
}

} // namespace

mpfr_prec_t working_precision() noexcept { return g_working_precision; }

PrecisionScope::PrecisionScope(mpfr_prec_t bits) : saved_(g_working_precision)
{
    require(bits >= MPFR_PREC_MIN && bits <= MPFR_PREC_MAX, "precision out of range");
    g_working_precision = bits;
}

PrecisionScope::~PrecisionScope() { g_working_precision = saved_; }

Real::Real() { mpfr_init2(value_, g_working_precision); mpfr_set_zero(value_, 1); }
Real::Real(int v) : Real(static_cast<long>(v)) {}
Real::Real(long v) { mpfr_init2(value_, g_working_precision); mpfr_set_si(value_, v, MPFR_RNDN); }
Real::Real(unsigned long v) { mpfr_init2(value_, g_working_precision); mpfr_set_ui(value_, v, MPFR_RNDN); }
Real::Real(double v) { mpfr_init2(value_, g_working_precision); mpfr_set_d(value_, v, MPFR_RNDN); }
Real::Real(const mpz_class& v) { mpfr_init2(value_, g_working_precision); mpfr_set_z(value_, v.get_mpz_t(), MPFR_RNDN); }
Real::Real(const mpq_class& v) { mpfr_init2(value_, g_working_precision); mpfr_set_q(value_, v.get_mpq_t(), MPFR_RNDN); }

Real Real::parse(std::string_view text)
{
    Real r;
    const std::string s(text);
    char* end = nullptr;
    if (!s.empty()) mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
    if (s.empty() || end == s.c_str() || *end != '\0' || !r.is_finite())
        fail(ErrorCode::invalid_argument, "not a decimal number: '" + s + "'");
    return r;
}

Real::Real(const Real& other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept
{
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real& Real::operator+=(const Real& rhs) { mpfr_add(value_, value_, rhs.value_, MPFR_RNDN); return *this; }
Real& Real::operator-=(const Real& rhs) { mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN); return *this; }
Real& Real::operator*=(const Real& rhs) { mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN); return *this; }
Real& Real::operator/=(const Real& rhs) { mpfr_div(value_, value_, rhs.value_, MPFR_RNDN); return *this; }

Real Real::operator-() const
{
    Real r;
    mpfr_neg(r.value_, value_, MPFR_RNDN);
    return r;
}

long Real::exponent2() const noexcept
{
    if (mpfr_zero_p(value_)) return -(1L << 40);
    return mpfr_get_exp(value_);
}

std::string Real::to_string(int digits) const
{
    if (digits <= 0) digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30103)) + 1;
    char* buffer = nullptr;
    mpfr_asprintf(&buffer, "%.*Re", digits - 1, value_);
    std::string out(buffer);
    mpfr_free_str(buffer);
    return out;
}

#define SRP_BINARY(op, fn)                                  \
    Real operator op(const Real& a, const Real& b)          \
    {                                                       \
        Real r;                                             \
        fn(r.get(), a.get(), b.get(), MPFR_RNDN);           \
        return r;                                           \
    }
SRP_BINARY(+, mpfr_add)
SRP_BINARY(-, mpfr_sub)
SRP_BINARY(*, mpfr_mul)
SRP_BINARY(/, mpfr_div)
#undef SRP_BINARY

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }
bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }

#define SRP_UNARY(name, fn)                 \
    Real name(const Real& x)                \
    {                                       \
        Real r;                             \
        fn(r.get(), x.get(), MPFR_RNDN);    \
        return r;                           \
    }
SRP_UNARY(abs, mpfr_abs)
SRP_UNARY(sqrt, mpfr_sqrt)
SRP_UNARY(exp, mpfr_exp)
SRP_UNARY(log, mpfr_log)
SRP_UNARY(sin, mpfr_sin)
SRP_UNARY(cos, mpfr_cos)
SRP_UNARY(cosh, mpfr_cosh)
SRP_UNARY(gamma, mpfr_gamma)
#undef SRP_UNARY

Real atan2(const Real& y, const Real& x)
{
    Real r;
    mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
    return r;
}

Real pow(const Real& x, const Real& y)
{
    Real r;
    mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
    return r;
}

Real pow(const Real& x, long n)
{
    Real r;
    mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
    return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real ldexp(const Real& x, long e)
{
    Real r;
    mpfr_mul_2si(r.get(), x.get(), e, MPFR_RNDN);
    return r;
}

Real round(const Real& x)
{
    Real r;
    mpfr_round(r.get(), x.get());
    return r;
}

Real epsilon_bits(long bits) { return ldexp(Real(1), -bits); }

Real pow10_neg(double decimal_digits)
{
    Real ten(10);
    return pow(ten, -Real(decimal_digits));
}

const Real& const_pi()
{
    static std::map<mpfr_prec_t, Real> cache;
    static std::mutex mutex;
    return cached_constant(cache, mutex, [](mpfr_ptr out) { mpfr_const_pi(out, MPFR_RNDN); });
}

const Real& const_log2()
{
    static std::map<mpfr_prec_t, Real> cache;
    static std::mutex mutex;
    return cached_constant(cache, mutex, [](mpfr_ptr out) { mpfr_const_log2(out, MPFR_RNDN); });
}

} // namespace srp
