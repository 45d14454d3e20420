#pragma once
// Weak identities of (A1, V) per multidegree, the span of the L-ideal I, and
// the comparison Id = I.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "weylpi/free_algebra.hpp"
#include "weylpi/matrix.hpp"
#include "weylpi/weyl.hpp"

namespace weylpi {

/// Evaluations of the words of multidegree d (columns, DegLex order) as sparse
/// integer rows over the coordinates (i, j, parameter monomial).
struct WordEvaluation {
    std::vector<Word> words;
    std::size_t n_coordinates = 0;
    std::vector<SparseIntRow> rows;  // one per word
};
WordEvaluation word_evaluation(const MultiDegree& d);

/// Basis of Id(A1,V)_d in reduced echelon form over the word basis.
std::vector<NCPoly> identity_basis(const MultiDegree& d, const FieldSpec& field = FieldSpec::rationals());

/// dim Id(A1,V)_d.
std::size_t identity_dimension(const MultiDegree& d, const FieldSpec& field = FieldSpec::rationals());

/// Rows w1 g(x_j1..x_jk) w2 for g in {Gamma_3, St_3, T_4} landing in multidegree d,
/// over the word basis of d, deduplicated up to sign.
std::vector<SparseIntRow> ideal_span_rows(const MultiDegree& d);
std::size_t ideal_span_dimension(const MultiDegree& d, const FieldSpec& field = FieldSpec::rationals());

enum class Verdict { Verified, Refuted, Inconclusive };
std::string to_string(Verdict v);

struct ConjectureReport {
    MultiDegree mdeg;
    FieldSpec field;
    std::size_t n_reduced = 0;
    std::size_t eval_rank = 0;
    std::size_t dim_id = 0;
    std::optional<std::size_t> dim_I;
    Verdict verdict = Verdict::Inconclusive;
    std::optional<std::string> witness;
    double elapsed_ms = 0;
    std::vector<std::string> diagnostics;
};

struct VerifyOptions {
    /// Total degree cap; WEYLPI_MAX_DEGREE overrides the default of 8.
    unsigned max_degree = default_max_degree();
    /// Budget for dense elimination storage.
    std::size_t memory_budget_bytes = std::size_t{8} << 30;
    unsigned jobs = 1;

    static unsigned default_max_degree();
};

ConjectureReport verify_conjecture(const MultiDegree& d, const FieldSpec& field = FieldSpec::rationals(),
                                   const VerifyOptions& opts = {});

/// Reports in the order of `degrees`, computed on up to opts.jobs threads.
std::vector<ConjectureReport> verify_all(const std::vector<MultiDegree>& degrees, const FieldSpec& field,
                                         const VerifyOptions& opts = {});

/// Partitions of n as nonincreasing multidegrees, largest first part first.
std::vector<MultiDegree> sorted_multidegrees(unsigned n);

struct CertificateEntry {
    unsigned i;
    NCPoly monomial;     // x1^{r-i} x2^{s-i} [x1,x2]^i
    WeylElement value;   // its value at (x, y)
};
/// Requires r >= s >= 1 (std::invalid_argument otherwise).
std::vector<CertificateEntry> two_variable_certificate(unsigned r, unsigned s,
                                                       const FieldSpec& field = FieldSpec::rationals());

}  // namespace weylpi
