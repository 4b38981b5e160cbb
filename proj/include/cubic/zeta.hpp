#ifndef CUBIC_ZETA_HPP
#define CUBIC_ZETA_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubic/errors.hpp"
#include "cubic/rational.hpp"

namespace cubic {

/// Power sums p_m = tr(Phi^m | V) of the 22 twisted Frobenius eigenvalues,
/// extracted from point counts.
struct TraceSeries {
    uint32_t q = 2;
    std::vector<Rat> traces;  // p_1 .. p_M
};

/// Monic degree-22 polynomial with exact rational coefficients, plus the
/// sign of its functional equation chi(t) = sign * t^22 chi(1/t).
struct CharPoly {
    std::vector<Rat> coeffs;  // 23 entries, coeffs[k] = coefficient of t^k
    int sign = +1;
    std::string provenance;
};

/// Inverts the trace formula
///   #X(F_{q^m}) = 1 + q^m + q^{2m} (1 + p_m) + q^{3m} + q^{4m}.
TraceSeries traces_from_counts(std::span<const long long> counts, uint32_t q = 2);

/// Newton's identities: elementary symmetric functions e_1..e_k from power
/// sums p_1..p_k, via k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i.
std::vector<Rat> newton_elementary(std::span<const Rat> p);

/// Forward direction: power sums p_1..p_M of the root multiset of a monic
/// degree-n polynomial with elementary symmetric functions e_1..e_n.
std::vector<Rat> newton_power_sums(std::span<const Rat> e, int n, int M);

/// Builds chi from at least 11 counts: coefficient of t^{22-k} is
/// (-1)^k e_k for k <= 11, the rest fixed by the functional equation.
/// Returns one candidate when e_11 != 0 (the sign is forced to +1), two
/// (sign +1 and -1) when e_11 = 0.
std::vector<CharPoly> complete_charpoly(std::span<const long long> counts,
                                        uint32_t q = 2);

/// Keeps the candidates whose 22 complex roots all lie within 1e-9 of the
/// unit circle; if several survive, the m = 12 count is required and the
/// candidate reproducing it wins.  Throws invalid_charpoly_error when no
/// candidate survives or the ambiguity cannot be resolved.
CharPoly disambiguate(const std::vector<CharPoly>& candidates,
                      std::optional<long long> count12 = std::nullopt,
                      uint32_t q = 2);

/// Predicted #X(F_{q^m}) from chi by the forward Newton recurrence; throws
/// invalid_charpoly_error when the prediction is not a non-negative integer.
long long predict_count(const CharPoly& chi, int m, uint32_t q = 2);

struct IntegralityReport {
    bool twist2 = false;  // 2^22 chi(t/2) has integer coefficients
    bool twist4 = false;  // 4^22 chi(t/4) has integer coefficients
    bool all_integral = false;  // chi itself (relevant: it should NOT be)
};

IntegralityReport integrality_checks(const CharPoly& chi);

/// Exact coefficients of the n-th cyclotomic polynomial, ascending.
std::vector<Int> cyclotomic_polynomial(int n);

/// Euler's totient.
int euler_phi(int n);

/// All n with phi(n) <= deg, i.e. every n whose cyclotomic polynomial could
/// divide a polynomial of that degree.  (phi(n) > 22 for all n > 66.)
std::vector<int> cyclotomic_candidates(int deg);

struct CyclotomicFactor {
    int n = 0;
    int multiplicity = 0;
};

/// Every n with Phi_n | chi, with multiplicities, by exact division.
std::vector<CyclotomicFactor> cyclotomic_factors(const CharPoly& chi);

struct IrreducibilityReport {
    enum Status { Irreducible, Reducible, Inconclusive } status = Inconclusive;
    std::vector<int> primes_used;          // good primes that contributed
    std::vector<int> possible_factor_degrees;  // proper factor degrees not ruled out
    std::string witness;                   // a rational factor, when reducible
};

/// Best-effort irreducibility over Q by intersecting factor-degree patterns
/// from distinct-degree factorization modulo small odd primes.
IrreducibilityReport irreducibility_modular(const CharPoly& chi);

struct NLReport {
    CharPoly chi;
    std::vector<CyclotomicFactor> cyclotomic;
    int rank_bound = 0;      // sum of phi(n) * multiplicity
    bool nl_general = false; // rank bound 0
    IntegralityReport integrality;
    IrreducibilityReport irreducibility;
};

/// Full verdict for one characteristic polynomial.  The verdict relies only
/// on the exact cyclotomic scan; irreducibility is advisory.
NLReport nl_verdict(const CharPoly& chi);

/// JSON report: counts, traces, chi as "num/den" strings, sign, cyclotomic
/// factors, irreducibility, integrality, rank bound, verdict.
std::string nl_report_json(std::span<const long long> counts,
                           const NLReport& report, uint32_t q = 2);

} // namespace cubic

#endif
