#include "weylpi/evaluation.hpp"

namespace weylpi {

namespace {

WeylElement substitute_word(const Word& w, std::span<const VElem> t, const FieldSpec& f) {
    WeylElement e = WeylElement::scalar(Scalar::one(f));
    for (Letter l : w.letters) e = t[l - 1u] == VElem::X ? e.times_x() : e.times_y();
    return e;
}

}  // namespace

WeylElement generic_substitution(const NCPoly& f) {
    const FieldSpec& field = f.field();
    WeylElement total(field);
    std::vector<CommPoly> alpha, beta;
    for (std::size_t k = 1; k <= f.nvars(); ++k) {
        alpha.push_back(CommPoly::parameter(field, alpha_index(k)));
        beta.push_back(CommPoly::parameter(field, beta_index(k)));
    }
    for (const auto& [w, c] : f.terms()) {
        WeylElement e = WeylElement::scalar(c);
        for (Letter l : w.letters) e = e.times_x() * alpha[l - 1u] + e.times_y() * beta[l - 1u];
        total += e;
    }
    return total;
}

WeylElement substitute_tuple(const NCPoly& f, std::span<const VElem> t) {
    if (t.size() != f.nvars()) {
        throw ArityMismatch("tuple has " + std::to_string(t.size()) + " entries, polynomial has " +
                            std::to_string(f.nvars()) + " variables");
    }
    WeylElement total(f.field());
    for (const auto& [w, c] : f.terms()) total += substitute_word(w, t, f.field()) * c;
    return total;
}

bool is_weak_identity(const NCPoly& f, const IdentityCheckOptions& opts) {
    for (const auto& [d, comp] : multihomogeneous_components(f)) {
        if (opts.multilinear_fast_path && d.is_multilinear()) {
            // Multilinear: vanishing on the basis {x, y} suffices.
            const std::size_t m = comp.nvars();
            std::vector<VElem> t(m);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
                for (std::size_t k = 0; k < m; ++k) t[k] = (mask >> k) & 1 ? VElem::Y : VElem::X;
                if (!substitute_tuple(comp, t).is_zero()) return false;
            }
        } else if (!generic_substitution(comp).is_zero()) {
            return false;
        }
    }
    return true;
}

std::map<EvalCoordinate, long> integer_evaluation(const Word& w) {
    const std::size_t nparams = 2 * static_cast<std::size_t>(w.max_letter());
    std::map<EvalCoordinate, long> cur{{EvalCoordinate{0, 0, ParamMonomial(nparams, 0)}, 1L}};
    for (Letter l : w.letters) {
        std::map<EvalCoordinate, long> next;
        for (const auto& [key, c] : cur) {
            // alpha_l * (. * x)
            EvalCoordinate kx = key;
            ++kx.params[alpha_index(l)];
            kx.i += 1;
            next[kx] += c;
            if (key.j > 0) {
                EvalCoordinate kd = key;
                ++kd.params[alpha_index(l)];
                kd.j -= 1;
                next[kd] += c * static_cast<long>(key.j);
            }
            // beta_l * (. * y)
            EvalCoordinate ky = key;
            ++ky.params[beta_index(l)];
            ky.j += 1;
            next[ky] += c;
        }
        cur.swap(next);
    }
    std::map<EvalCoordinate, long> out;
    for (auto& [key, c] : cur) {
        if (c == 0) continue;
        EvalCoordinate k = key;
        while (!k.params.empty() && k.params.back() == 0) k.params.pop_back();
        out[std::move(k)] += c;
    }
    return out;
}

}  // namespace weylpi
