#pragma once

#include "normprobe/gateway.hpp"

#include <vector>

namespace normprobe::gateway {

/// Prescriptive value of x in [0, 1] under a novel context: (11 - grade) / 11.
/// For random schemes the grade of the nearest listed value is used; `none` gives 0.
double value_of(int x, const NovelContext& ctx);

/// Sample probabilities over the integer grid ctx.clamp.lo..hi:
/// p(x) proportional to base(x) * exp(lambda * v(x)), base being the input
/// distribution narrowed by `spread`.
std::vector<double> sample_distribution(const NovelContext& ctx, double lambda, double spread);

/// Exact mean of sample_distribution.
double expected_sample(const NovelContext& ctx, double lambda, double spread);

/// Smallest-magnitude lambda >= 0 whose expected sample sits `target_shift`
/// above (or below, if negative) the base mean, by bisection.
/// Throws ParameterError if the target cannot be reached with lambda <= 1000.
double calibrate_lambda(const NovelContext& ctx, double target_shift, double spread);

class MockResponder final : public Responder {
public:
    explicit MockResponder(MockModel model, std::string model_id = "mock-softmax");

    Completion complete(const Probe& probe) override;

    /// Text answer. Throws ContractError when kind and context do not fit.
    std::string respond(const Probe& probe) const;

    double lambda_positive() const noexcept { return lambda_pos_; }
    double lambda_negative() const noexcept { return lambda_neg_; }
    /// Value weight applied for a scheme: negative schemes use the negative
    /// weight, `none` uses 0, everything else the positive weight.
    double lambda_for(synth::SchemeKind kind) const noexcept;

    const MockModel& model() const noexcept { return model_; }

private:
    MockModel model_;
    std::string model_id_;
    double lambda_pos_;
    double lambda_neg_;
};

/// The default novel setting (unimodal 45/15 on [0, 100]) with a scheme.
NovelContext reference_context(synth::GradeScheme scheme);

} // namespace normprobe::gateway
