#include "weylpi/identities.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "weylpi/bracket.hpp"
#include "weylpi/errors.hpp"
#include "weylpi/evaluation.hpp"
#include "weylpi/parser.hpp"

namespace weylpi {

namespace {

long to_long(const Scalar& c) {
    const mpq_class q = c.rational();
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) throw std::logic_error("expected a small integer");
    return q.get_num().get_si();
}

std::map<Word, std::uint32_t, DegLex> index_words(const std::vector<Word>& words) {
    std::map<Word, std::uint32_t, DegLex> idx;
    for (std::uint32_t i = 0; i < words.size(); ++i) idx.emplace(words[i], i);
    return idx;
}

std::vector<SparseIntRow> transpose(const std::vector<SparseIntRow>& rows, std::size_t cols) {
    std::vector<SparseIntRow> out(cols);
    for (std::uint32_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) out[c].emplace_back(r, v);
    return out;
}

// Rank over the field, stopping once `cap` is reached.
std::size_t exact_rank(const std::vector<SparseIntRow>& rows, std::size_t cols, const FieldSpec& field,
                       std::size_t cap = SIZE_MAX) {
    if (field.is_rational()) {
        RationalEchelon ech(cols);
        for (const auto& r : rows) {
            if (ech.rank() >= cap) break;
            ech.add_row(r);
        }
        return ech.rank();
    }
    ModularEchelon ech(static_cast<std::uint32_t>(field.characteristic()), cols);
    for (const auto& r : rows) {
        if (ech.rank() >= cap) break;
        ech.add_row(r);
    }
    return ech.rank();
}

std::size_t mod_rank(const std::vector<SparseIntRow>& rows, std::size_t cols, std::uint32_t p,
                     std::size_t cap = SIZE_MAX) {
    ModularEchelon ech(p, cols);
    for (const auto& r : rows) {
        if (ech.rank() >= cap) break;
        ech.add_row(r);
    }
    return ech.rank();
}

// Kernel of the matrix whose rows are `rows` (integer entries), exact over the field.
// Only a spanning set of independent rows goes into the dense elimination.
std::vector<std::vector<Scalar>> integer_kernel(const std::vector<SparseIntRow>& rows, std::size_t cols,
                                                const FieldSpec& field) {
    std::vector<std::vector<long>> kept;
    auto keep = [&](const SparseIntRow& r) {
        std::vector<long> dense(cols, 0);
        for (const auto& [c, v] : r) dense[c] += v;
        kept.push_back(std::move(dense));
    };
    if (field.is_rational()) {
        RationalEchelon ech(cols);
        for (const auto& r : rows) {
            if (ech.rank() == cols) break;
            if (ech.add_row(r)) keep(r);
        }
    } else {
        ModularEchelon ech(static_cast<std::uint32_t>(field.characteristic()), cols);
        for (const auto& r : rows) {
            if (ech.rank() == cols) break;
            if (ech.add_row(r)) keep(r);
        }
    }
    if (kept.empty()) {
        std::vector<std::vector<Scalar>> basis;
        for (std::size_t f = 0; f < cols; ++f) {
            std::vector<Scalar> v(cols, Scalar::zero(field));
            v[f] = Scalar::one(field);
            basis.push_back(std::move(v));
        }
        return basis;
    }
    return kernel_basis(ExactMatrix::from_rows(field, kept));
}

void check_memory(std::size_t rows, std::size_t cols, std::size_t bytes_per_entry, const VerifyOptions& opts,
                  const char* what) {
    const double need = static_cast<double>(std::min(rows, cols)) * static_cast<double>(cols) *
                        static_cast<double>(bytes_per_entry);
    if (need > static_cast<double>(opts.memory_budget_bytes)) {
        throw ResourceLimit(std::string(what) + " needs about " + std::to_string(static_cast<long long>(need)) +
                            " bytes, over the budget of " + std::to_string(opts.memory_budget_bytes));
    }
}

// Scales a rational vector to a primitive integer row.
SparseIntRow integer_row(const std::vector<Scalar>& v) {
    mpz_class l = 1;
    for (const auto& c : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
    SparseIntRow row;
    for (std::uint32_t i = 0; i < v.size(); ++i) {
        const mpq_class s = v[i].rational() * l;
        if (s == 0) continue;
        if (!s.get_num().fits_slong_p()) throw std::overflow_error("witness coefficient too large");
        row.emplace_back(i, s.get_num().get_si());
    }
    return row;
}

SparseIntRow residue_row(const std::vector<Scalar>& v) {
    SparseIntRow row;
    for (std::uint32_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) row.emplace_back(i, static_cast<long>(v[i].residue()));
    return row;
}

}  // namespace

WordEvaluation word_evaluation(const MultiDegree& d) {
    WordEvaluation out;
    out.words = words_of_multidegree(d);
    std::vector<std::map<EvalCoordinate, long>> evals;
    evals.reserve(out.words.size());
    std::map<EvalCoordinate, std::uint32_t> coords;
    for (const auto& w : out.words) {
        evals.push_back(integer_evaluation(w));
        for (const auto& [c, v] : evals.back()) coords.emplace(c, 0);
    }
    std::uint32_t n = 0;
    for (auto& [c, i] : coords) i = n++;
    out.n_coordinates = n;
    out.rows.reserve(evals.size());
    for (const auto& e : evals) {
        SparseIntRow row;
        row.reserve(e.size());
        for (const auto& [c, v] : e) row.emplace_back(coords.at(c), v);
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::vector<NCPoly> identity_basis(const MultiDegree& d, const FieldSpec& field) {
    const WordEvaluation ev = word_evaluation(d);
    // Kernel of E (coordinates x words): its rows are the columns of ev.rows.
    const auto kernel = integer_kernel(transpose(ev.rows, ev.n_coordinates), ev.words.size(), field);
    std::vector<NCPoly> out;
    for (const auto& v : kernel) {
        NCPoly f(field, d.nvars());
        for (std::size_t i = 0; i < v.size(); ++i) f.add_term(ev.words[i], v[i]);
        out.push_back(std::move(f));
    }
    return out;
}

std::size_t identity_dimension(const MultiDegree& d, const FieldSpec& field) {
    const WordEvaluation ev = word_evaluation(d);
    return ev.words.size() - exact_rank(ev.rows, ev.n_coordinates, field);
}

std::vector<SparseIntRow> ideal_span_rows(const MultiDegree& d) {
    const std::size_t m = d.nvars();
    const auto words = words_of_multidegree(d);
    const auto index = index_words(words);
    const std::vector<NCPoly> gens = {gamma_m(3), st3(), t4()};
    std::set<SparseIntRow> rows;

    for (const auto& g : gens) {
        const std::size_t k = g.nvars();
        if (k > d.total() || m == 0) continue;
        std::vector<Letter> tuple(k, 1);
        while (true) {
            std::vector<unsigned> rest(d.counts().begin(), d.counts().begin() + static_cast<std::ptrdiff_t>(m));
            bool fits = true;
            for (Letter t : tuple) {
                if (rest[t - 1u] == 0) {
                    fits = false;
                    break;
                }
                --rest[t - 1u];
            }
            if (fits) {
                const NCPoly gp = generator_at(g, tuple);
                if (!gp.is_zero()) {
                    const MultiDegree rd(rest);
                    for (const auto& u : words_of_multidegree(rd)) {
                        for (std::size_t cut = 0; cut <= u.size(); ++cut) {
                            const Word w1(std::vector<Letter>(u.letters.begin(),
                                                              u.letters.begin() + static_cast<std::ptrdiff_t>(cut)));
                            const Word w2(std::vector<Letter>(u.letters.begin() + static_cast<std::ptrdiff_t>(cut),
                                                              u.letters.end()));
                            std::map<std::uint32_t, long> acc;
                            for (const auto& [w, c] : gp.terms()) acc[index.at(w1 * w * w2)] += to_long(c);
                            SparseIntRow row;
                            for (const auto& [col, v] : acc)
                                if (v != 0) row.emplace_back(col, v);
                            if (row.empty()) continue;
                            if (row.front().second < 0)
                                for (auto& e : row) e.second = -e.second;
                            rows.insert(std::move(row));
                        }
                    }
                }
            }
            // next tuple in [1..m]^k
            std::size_t pos = k;
            while (pos > 0 && tuple[pos - 1] == m) tuple[--pos] = 1;
            if (pos == 0) break;
            ++tuple[pos - 1];
        }
    }
    return {rows.begin(), rows.end()};
}

std::size_t ideal_span_dimension(const MultiDegree& d, const FieldSpec& field) {
    const auto rows = ideal_span_rows(d);
    return exact_rank(rows, words_of_multidegree(d).size(), field);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Verified:
            return "Verified";
        case Verdict::Refuted:
            return "Refuted";
        case Verdict::Inconclusive:
            return "Inconclusive";
    }
    return "?";
}

unsigned VerifyOptions::default_max_degree() {
    if (const char* env = std::getenv("WEYLPI_MAX_DEGREE")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return 8;
}

ConjectureReport verify_conjecture(const MultiDegree& d_in, const FieldSpec& field, const VerifyOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    const MultiDegree d = d_in.trimmed();
    if (d.total() == 0) throw std::invalid_argument("verify_conjecture needs a nonzero multidegree");
    if (d.total() > opts.max_degree) {
        throw ResourceLimit("total degree " + std::to_string(d.total()) + " exceeds the cap of " +
                            std::to_string(opts.max_degree));
    }

    ConjectureReport rep;
    rep.mdeg = d;
    rep.field = field;

    const WordEvaluation ev = word_evaluation(d);
    const std::size_t nwords = ev.words.size();
    const auto index = index_words(ev.words);
    check_memory(nwords, ev.n_coordinates, sizeof(std::uint32_t), opts, "word evaluation matrix");

    // Completely reduced monomials and their evaluations.
    std::vector<BracketMonomial> cr;
    if (d.total() >= 2) cr = enumerate_completely_reduced(d);
    rep.n_reduced = cr.size();
    std::vector<SparseIntRow> cr_rows;
    cr_rows.reserve(cr.size());
    for (const auto& b : cr) {
        std::map<std::uint32_t, long> acc;
        const NCPoly e = expand(b);
        for (const auto& [w, c] : e.terms()) {
            const long s = to_long(c);
            for (const auto& [col, v] : ev.rows[index.at(w)]) acc[col] += s * v;
        }
        SparseIntRow row;
        for (const auto& [col, v] : acc)
            if (v != 0) row.emplace_back(col, v);
        cr_rows.push_back(std::move(row));
    }

    const std::vector<SparseIntRow> irows = ideal_span_rows(d);
    if (field.is_rational()) {
        // Reductions mod p never raise a rank, and dim I <= dim Id over Q, so
        // rank_p(E) + rank_p(I) = #words pins both numbers exactly.
        bool cr_full = false;
        for (std::uint32_t p : screening_primes().first(2)) {
            if (mod_rank(cr_rows, ev.n_coordinates, p) == cr.size()) {
                cr_full = true;
                break;
            }
        }
        rep.eval_rank = cr_full ? cr.size() : exact_rank(cr_rows, ev.n_coordinates, field);

        bool settled = false;
        for (std::uint32_t p : screening_primes().first(2)) {
            const std::size_t re = mod_rank(ev.rows, ev.n_coordinates, p);
            const std::size_t ri = mod_rank(irows, nwords, p, nwords - re);
            if (re + ri == nwords) {
                rep.dim_id = ri;
                rep.dim_I = ri;
                settled = true;
                break;
            }
        }
        if (!settled) {
            rep.diagnostics.push_back("modular certificate failed; exact rational elimination used");
            check_memory(nwords, ev.n_coordinates, 32, opts, "rational elimination");
            rep.dim_id = nwords - exact_rank(ev.rows, ev.n_coordinates, field);
            rep.dim_I = exact_rank(irows, nwords, field, rep.dim_id);
        }
    } else {
        const auto p = static_cast<std::uint32_t>(field.characteristic());
        rep.eval_rank = mod_rank(cr_rows, ev.n_coordinates, p);
        rep.dim_id = nwords - mod_rank(ev.rows, ev.n_coordinates, p);
        rep.dim_I = mod_rank(irows, nwords, p, rep.dim_id);
    }

    if (rep.eval_rank == rep.n_reduced) {
        if (rep.dim_I && *rep.dim_I != rep.dim_id) {
            rep.verdict = Verdict::Inconclusive;
            rep.diagnostics.push_back("reduced monomials evaluate independently but dim I (" +
                                      std::to_string(*rep.dim_I) + ") != dim Id (" + std::to_string(rep.dim_id) + ")");
        } else {
            rep.verdict = Verdict::Verified;
        }
    } else if (rep.dim_I && *rep.dim_I == rep.dim_id) {
        rep.verdict = Verdict::Verified;
        rep.diagnostics.push_back("reduced monomials are dependent (rank " + std::to_string(rep.eval_rank) + " of " +
                                  std::to_string(rep.n_reduced) + "); verified by dimension count");
    } else {
        // Look for a combination of reduced monomials that vanishes on V but is not in I.
        const auto kernel = integer_kernel(transpose(cr_rows, ev.n_coordinates), cr.size(), field);
        for (const auto& v : kernel) {
            NCPoly f(field, d.nvars());
            for (std::size_t i = 0; i < v.size(); ++i)
                if (!v[i].is_zero()) f += expand(cr[i], field) * v[i];
            std::vector<Scalar> coords(nwords, Scalar::zero(field));
            for (const auto& [w, c] : f.terms()) coords[index.at(w)] = c;
            const SparseIntRow wrow = field.is_rational() ? integer_row(coords) : residue_row(coords);
            bool in_ideal;
            if (field.is_rational()) {
                RationalEchelon ech(nwords);
                for (const auto& r : irows) ech.add_row(r);
                in_ideal = !ech.add_row(wrow);
            } else {
                ModularEchelon ech(static_cast<std::uint32_t>(field.characteristic()), nwords);
                for (const auto& r : irows) ech.add_row(r);
                in_ideal = !ech.add_row(wrow);
            }
            if (!in_ideal) {
                rep.verdict = Verdict::Refuted;
                rep.witness = format(f);
                break;
            }
        }
        if (rep.verdict != Verdict::Refuted) {
            rep.diagnostics.push_back("dim I < dim Id but no witness among reduced-monomial relations");
        }
    }

    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::vector<ConjectureReport> verify_all(const std::vector<MultiDegree>& degrees, const FieldSpec& field,
                                         const VerifyOptions& opts) {
    std::vector<ConjectureReport> out(degrees.size());
    std::vector<std::exception_ptr> errors(degrees.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < degrees.size();) {
            try {
                out[i] = verify_conjecture(degrees[i], field, opts);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(degrees.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::vector<MultiDegree> sorted_multidegrees(unsigned n) {
    std::vector<MultiDegree> out;
    std::vector<unsigned> cur;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned cap) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (unsigned part = std::min(left, cap); part >= 1; --part) {
            cur.push_back(part);
            rec(left - part, part);
            cur.pop_back();
        }
    };
    if (n > 0) rec(n, n);
    return out;
}

std::vector<CertificateEntry> two_variable_certificate(unsigned r, unsigned s, const FieldSpec& field) {
    if (s < 1 || r < s) throw std::invalid_argument("two_variable_certificate needs r >= s >= 1");
    const NCPoly x1 = NCPoly::variable(field, 1), x2 = NCPoly::variable(field, 2);
    const NCPoly br = commutator(x1, x2);
    const std::vector<VElem> xy = {VElem::X, VElem::Y};
    std::vector<CertificateEntry> out;
    for (unsigned i = 1; i <= s; ++i) {
        const NCPoly mono = power(x1, r - i) * power(x2, s - i) * power(br, i);
        out.push_back({i, mono, substitute_tuple(mono, xy)});
    }
    return out;
}

}  // namespace weylpi
