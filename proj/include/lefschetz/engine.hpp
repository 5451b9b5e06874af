#ifndef LEFSCHETZ_ENGINE_HPP
#define LEFSCHETZ_ENGINE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lefschetz/families.hpp"
#include "lefschetz/ideal.hpp"
#include "lefschetz/matrix.hpp"

namespace lefschetz {

/// h-vector (h_0,...,h_e), h_0 = 1, h_e > 0.
struct HVector {
    std::vector<long> values;

    int socle_degree() const { return static_cast<int>(values.size()) - 1; }
    long at(int t) const {
        return (t >= 0 && t < static_cast<int>(values.size()))
                   ? values[static_cast<std::size_t>(t)]
                   : 0;
    }
    friend bool operator==(const HVector&, const HVector&) = default;
};

HVector h_vector(const MonomialIdeal& I);

/// Sum of all h_t = K-dimension of R/I.
long total_dimension(const HVector& h);

/// Socle dimensions per degree.  For monomial ideals the socle is spanned
/// by standard monomials u with x_j*u in I for every j, a characteristic-
/// independent condition; computed by divisibility scan.
struct SocleInfo {
    std::vector<long> per_degree;
    int socle_degree = 0;
    bool is_level = false;
};

SocleInfo socle(const MonomialIdeal& I);

struct WlpRow {
    int t = 0;
    long h_t = 0;
    long h_t1 = 0;
    long rank = 0;
    bool maximal = false;
};

enum class Verdict { Holds, Fails };

struct WlpReport {
    Characteristic chr;
    HVector h;
    std::vector<WlpRow> rows;
    Verdict verdict = Verdict::Holds;
    std::optional<int> first_failure;
    std::optional<Polynomial> witness; // kernel element when injectivity fails
    std::string witness_note;          // cokernel note when surjectivity fails
};

/// Per-degree ranks of x(ell) with ell = x_1+...+x_r.  Throws
/// DimensionCapExceeded when a graded piece is larger than opts.max_dim.
struct CheckOptions {
    std::size_t max_dim = 0;        // 0 = unlimited
    bool general_ell = false;       // experimentation hook, not verdict path
    std::vector<Integer> ell;       // used only when general_ell
};

class DimensionCapExceeded : public std::runtime_error {
public:
    DimensionCapExceeded(int degree, std::size_t cap);
    int degree() const { return degree_; }

private:
    int degree_;
};

WlpReport wlp_check(const MonomialIdeal& I, Characteristic chr,
                    const CheckOptions& opts = {});

struct SlpRow {
    int i = 0;
    int d = 0;
    long h_i = 0;
    long h_id = 0;
    long rank = 0;
    bool maximal = false;
};

struct SlpReport {
    Characteristic chr;
    HVector h;
    std::vector<SlpRow> rows;
    Verdict verdict = Verdict::Holds;
    std::optional<std::pair<int, int>> first_failure; // (i, d)
};

/// Ranks of x(ell^d): A_i -> A_{i+d} for 0 <= i <= e-2, 1 <= d <= e-1,
/// i+d <= e, via products of consecutive single-step matrices.
SlpReport slp_check(const MonomialIdeal& I, Characteristic chr,
                    const CheckOptions& opts = {});

/// An explicit non-injectivity certificate: f in A_t with f != 0 and
/// f*ell = 0 mod (I, p).  Constructors reduce f mod the family ideal with
/// canonical coefficients mod claimed_char; `degenerate` flags a reduction
/// to zero (then the witness certifies nothing).
struct Witness {
    Polynomial f;
    int degree = 0;
    Characteristic claimed_char;
    FamilySpec family;
    bool degenerate = false;
};

/// Theorem A: degree-2 witness at char 3 for mixed ideals with alphas in
/// {2,3}, d >= 4.  f = sum_a x_a^2 - sum_{i<m} x_i x_m (= ell^2 mod 3).
Witness witness_thmA(const std::vector<int>& alphas, int d);

/// Theorem B: degree-3 witness at char 2 for alphas in {2,3,4}, d >= 5.
/// f = sum_{a != b} x_a^2 x_b + sum_a x_a^3 (= ell^3 mod 2).
Witness witness_thmB(const std::vector<int>& alphas, int d);

/// Theorem C: degree-(alpha-1) witness at char 2 for J(r, alpha).
/// f = sum_{a != b} x_a^{alpha-2} x_b + sum_a x_a^{alpha-1}.
Witness witness_thmC(int r, int alpha);

/// Proposition: f = sum of all squarefree degree-i monomials for the
/// squares family; claimed char = smallest prime dividing i+1.
/// Requires 1 <= i <= ceil(r/2) and i <= d-2.
Witness witness_prop(int r, int d, int i);

struct VerificationRecord {
    bool f_nonzero = false;
    bool product_zero = false;
    bool hilbert_le = false; // h_t <= h_{t+1}

    bool concludes_failure() const { return f_nonzero && product_zero && hilbert_le; }
};

/// Checks (a) reduce(f) != 0, (b) reduce(f*ell) == 0, (c) h_t <= h_{t+1},
/// all at the given characteristic.  Failed checks are reported, not thrown.
VerificationRecord verify_witness(const MonomialIdeal& I, Characteristic chr,
                                  const Witness& w);

enum class IdentityKind { ThmA, ThmB, ThmC, Prop };

/// Verifies over the integers (no modular reduction) that the proofs'
/// product multisets hit every target monomial with coefficient exactly
/// 3 / 2 / 2 / (i+1), together with the matching count identity.
bool counting_identity_check(int r, IdentityKind kind, int i = 0);

/// Primes p <= ceil(r/2) + 1: the characteristics where the squares family
/// admits an i = p-1 failure witness.
std::set<std::uint32_t> failing_primes_squares(int r);

/// h_t <= h_{t+1}, from actual basis sizes.
bool hilbert_inequality_check(const MonomialIdeal& I, int t);

// --- survey mode -----------------------------------------------------------
//
// Large report-only sweeps (the conjecture grid, CLI scans) need to decide
// per-degree maximality without paying for exact ranks of huge pieces.
// Decisions stay exact: full rank mod any prime certifies maximality over Q;
// an integer kernel vector (lifted symmetrically from F_p and checked with
// exact integer arithmetic) certifies non-maximality.  Degrees whose pieces
// exceed max_dim stop the survey with a Capped verdict.

enum class SurveyStatus { Holds, Fails, Capped };

struct SurveyRow {
    int t = 0;
    long h_t = 0;
    long h_t1 = 0;
    std::optional<long> rank; // present when computed exactly
    bool maximal = false;
};

struct SurveyResult {
    SurveyStatus status = SurveyStatus::Holds;
    std::optional<int> first_failure;
    std::optional<int> capped_at;
    std::vector<SurveyRow> rows;
};

struct SurveyOptions {
    std::size_t max_dim = 1500;
    bool stop_at_first_failure = true;
};

SurveyResult wlp_survey(const MonomialIdeal& I, Characteristic chr,
                        const SurveyOptions& opts = {});

} // namespace lefschetz

#endif
