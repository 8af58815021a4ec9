#include "qgamble/born.hpp"

#include <stdexcept>

#include "qgamble/error.hpp"

namespace qgamble {

State State::pure(Vector v) {
    if (v.dim() == 0 || v.is_zero()) throw Error(Errc::InvalidState, "pure state vector must be nonzero");
    return State(Kind::Pure, std::move(v), {});
}

State State::density(Matrix w) {
    if (!w.is_square() || w.rows() == 0) throw Error(Errc::InvalidState, "density matrix must be square");
    if (!w.is_hermitian()) throw Error(Errc::InvalidState, "density matrix must be self-adjoint");
    if (w.trace() != Scalar(1)) throw Error(Errc::InvalidState, "density matrix must have trace 1");
    if (!is_positive_semidefinite(w)) throw Error(Errc::InvalidState, "density matrix must be positive semidefinite");
    return State(Kind::Density, {}, std::move(w));
}

State State::density_unchecked(Matrix w) {
    return State(Kind::Density, {}, std::move(w));
}

State State::maximally_mixed(std::size_t dim) {
    return density(Scalar(Rational(1, static_cast<long>(dim))) * Matrix::identity(dim));
}

std::size_t State::dim() const {
    return is_pure() ? vector_.dim() : matrix_.rows();
}

const Vector& State::vector() const {
    if (!is_pure()) throw Error(Errc::InvalidState, "state is not pure");
    return vector_;
}

const Matrix& State::matrix() const {
    if (is_pure()) throw Error(Errc::InvalidState, "state is pure");
    return matrix_;
}

Matrix State::density_matrix() const {
    if (!is_pure()) return matrix_;
    return Scalar(vector_.norm2().inverse()) * Matrix::outer(vector_, vector_);
}

bool is_positive_semidefinite(const Matrix& m) {
    if (!m.is_hermitian()) return false;
    const std::size_t n = m.rows();
    Matrix a = m;
    for (std::size_t k = 0; k < n; ++k) {
        const Rational d = a(k, k).real();
        if (d.sign() < 0) return false;
        if (d.is_zero()) {
            for (std::size_t j = k + 1; j < n; ++j) {
                if (!a(k, j).is_zero()) return false;
            }
            continue;
        }
        // Schur complement on the trailing block.
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k).is_zero()) continue;
            const Scalar factor = a(i, k) / Scalar(d);
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
        }
    }
    return true;
}

Rational born(const State& state, const Projector& p) {
    if (state.dim() != p.dim()) {
        throw Error(Errc::DimMismatch, "state dimension " + std::to_string(state.dim()) + " vs subspace dimension " +
                                           std::to_string(p.dim()));
    }
    Scalar value;
    if (state.is_pure()) {
        const Vector& v = state.vector();
        value = inner(v, p.matrix() * v) / Scalar(v.norm2());
    } else {
        value = (state.matrix() * p.matrix()).trace();
    }
    if (!value.is_real()) throw Error(Errc::InvalidState, "Born value has a nonzero imaginary part");
    return value.real();
}

Rational born(const State& state, const Subspace& s) {
    if (state.dim() != s.ambient_dim()) {
        throw Error(Errc::DimMismatch, "state dimension " + std::to_string(state.dim()) + " vs subspace dimension " +
                                           std::to_string(s.ambient_dim()));
    }
    return born(state, projector(s));
}

namespace {

PossibilityReport require_valid(const Gamble& g, const Realization& r) {
    PossibilityReport report = verify_realization(g, r);
    if (!report.passes()) {
        throw Error(Errc::InvalidRealization, "realization fails the possibility check: " +
                                                  report.violations.front().message);
    }
    return report;
}

} // namespace

BornAssignment born_assignment(const State& state, const Gamble& g, const Realization& r) {
    const PossibilityReport report = require_valid(g, r);
    ProbabilityAssignment p;
    for (const auto& e : g.universe()) p.set(e, born(state, r.at(e)));
    if (!audit(p, g, report.derived_identities).coherent()) {
        throw std::logic_error("Born assignment failed the coherence audit");
    }
    return {std::move(p), state, r};
}

bool frame_check(const State& state, const Realization& r, const Gamble& g) {
    require_valid(g, r);
    for (const auto& alg : g.algebras()) {
        Rational total;
        for (const auto& a : alg.atoms()) total += born(state, r.at(a));
        if (total != Rational(1)) return false;
    }
    return true;
}

State luders(const State& state, const Subspace& s) {
    const Projector p = projector(s);
    const Rational prob = born(state, p);
    if (prob.is_zero()) throw Error(Errc::ZeroProbabilityCondition, "conditioning on an event of probability zero");
    if (state.is_pure()) return State::pure(p.matrix() * state.vector());
    Matrix w = p.matrix() * state.matrix() * p.matrix();
    return State::density(Scalar(prob.inverse()) * std::move(w));
}

BornAssignment sequential_condition(const EventId& outcome, const Realization& first, const State& state,
                                    const Gamble& second, const Realization& second_realization) {
    if (first.ambient_dim() != second_realization.ambient_dim()) {
        throw Error(Errc::DimMismatch, "sequential gambles must share the ambient space");
    }
    return born_assignment(luders(state, first.at(outcome)), second, second_realization);
}

} // namespace qgamble
