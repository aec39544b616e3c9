#pragma once

#include <memory>

#include "wavegraph/spectral.hpp"
#include "wavegraph/tychonoff.hpp"

namespace wavegraph {

/// Anything evaluable pointwise in (t, x) with time derivatives of any
/// available order. Double precision: this is the diagnostic-facing view.
class TimeEvaluable {
public:
    virtual ~TimeEvaluable() = default;
    virtual double value(double t, VertexId x) const = 0;
    virtual double derivative(double t, VertexId x, int order) const = 0;
};

class ZeroSolution final : public TimeEvaluable {
public:
    double value(double, VertexId) const override { return 0.0; }
    double derivative(double, VertexId, int) const override { return 0.0; }
};

/// Eigen-expansion solution; derivatives are termwise and exact in form.
class SpectralEvaluable final : public TimeEvaluable {
public:
    explicit SpectralEvaluable(WaveSolution sol) : sol_(std::move(sol)) {}
    double value(double t, VertexId x) const override { return sol_.evaluate(t, x); }
    double derivative(double t, VertexId x, int order) const override {
        return sol_.time_derivative(t, x, order);
    }
    const WaveSolution& wave() const { return sol_; }

private:
    WaveSolution sol_;
};

/// Counterexample viewed at double precision; t is converted exactly.
class CounterexampleEvaluable final : public TimeEvaluable {
public:
    explicit CounterexampleEvaluable(std::shared_ptr<const CounterexampleSolution> sol)
        : sol_(std::move(sol)) {}
    double value(double t, VertexId x) const override {
        return sol_->evaluate(mpq_class(t), x, 0).to_double();
    }
    double derivative(double t, VertexId x, int order) const override {
        return sol_->evaluate(mpq_class(t), x, order).to_double();
    }
    const CounterexampleSolution& exact() const { return *sol_; }

private:
    std::shared_ptr<const CounterexampleSolution> sol_;
};

}  // namespace wavegraph
