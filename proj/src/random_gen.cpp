#include "egh/random_gen.hpp"

namespace egh {

Form random_form(const RingContext& ctx, int d, Rng& rng) {
    if (d < 1) throw input_error("random forms of degree >= 1 only");
    const auto monos = monomials_of_degree(ctx, d);
    for (;;) {
        Form f(ctx, d);
        for (const Monomial& m : *monos) {
            Scalar c = static_cast<Scalar>(rng.below(ctx.modulus()));
            if (c != 0) f.add_term(m, c);
        }
        if (!f.is_zero()) return f;
    }
}

RegularSequenceSample random_regular_sequence(const RingContext& ctx, const DegreeVector& a,
                                              Rng& rng, int attempt_cap) {
    if (a.size() != ctx.nvars()) throw input_error("degree vector length does not match n");
    RegularSequenceSample sample;
    while (sample.attempts < attempt_cap) {
        ++sample.attempts;
        std::vector<Form> forms;
        forms.reserve(static_cast<std::size_t>(a.size()));
        for (int i = 0; i < a.size(); ++i) forms.push_back(random_form(ctx, a[i], rng));
        if (is_regular_sequence(ctx, forms, a)) {
            sample.forms = std::move(forms);
            return sample;
        }
    }
    throw generation_error("no regular sequence found in " + std::to_string(attempt_cap) +
                           " attempts");
}

IdealInstance random_defect_instance(const RingContext& ctx, const DegreeVector& a, int defect,
                                     Rng& rng, int attempt_cap) {
    std::vector<int> degrees(static_cast<std::size_t>(defect), a[0]);
    return random_mixed_instance(ctx, a, degrees, rng, attempt_cap);
}

InstanceSample sample_mixed_instance(const RingContext& ctx, const DegreeVector& a,
                                     std::span<const int> extra_degrees, Rng& rng,
                                     int attempt_cap) {
    RegularSequenceSample seq = random_regular_sequence(ctx, a, rng, attempt_cap);

    std::vector<Form> gens = seq.forms;
    std::vector<Form> extras;
    int extras_attempts = 0;
    for (int e : extra_degrees) {
        if (e < 2) throw input_error("extra generators must have degree >= 2");
        int attempts = 0;
        for (;;) {
            if (++attempts > attempt_cap)
                throw generation_error("no independent extra generator found in " +
                                       std::to_string(attempt_cap) + " attempts");
            ++extras_attempts;
            Form g = random_form(ctx, e, rng);
            GradedBasis piece = ideal_piece(ctx, gens, e);
            if (!piece.contains(g)) {
                gens.push_back(g);
                extras.push_back(std::move(g));
                break;
            }
        }
    }
    return InstanceSample{
        IdealInstance::trusted(ctx, std::move(seq.forms), std::move(extras)),
        seq.attempts, extras_attempts};
}

IdealInstance random_mixed_instance(const RingContext& ctx, const DegreeVector& a,
                                    std::span<const int> extra_degrees, Rng& rng,
                                    int attempt_cap) {
    return sample_mixed_instance(ctx, a, extra_degrees, rng, attempt_cap).instance;
}

}  // namespace egh
