#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hahn/errors.hpp"
#include "hahn/rational.hpp"

namespace hahn {

class Series;
class GeneratorContext;
using ContextPtr = std::shared_ptr<const GeneratorContext>;

/// How a generator prints. A generator is always stored as an infinitesimal;
/// the display hint recovers the user-facing notation.
struct GeneratorDisplay {
    enum class Kind {
        Plain,   // name^a
        ExpRate, // generator is e^(rate*x) with rate < 0; power a prints as e^(a*rate*x)
        Inverse, // generator is base^-1; power a prints as base^-a
    };
    Kind kind = Kind::Plain;
    Rational rate;    // ExpRate only
    std::string base; // Inverse only
};

struct GeneratorDecl {
    std::string name;
    Rational weight = 1;
    GeneratorDisplay display;
};

/// Declared generators of the monomial group, listed from most rapidly
/// varying to least. Each generator is infinitesimal by convention.
/// Logarithmic derivatives are attached once during session setup and the
/// context is immutable afterwards.
class GeneratorContext : public std::enable_shared_from_this<GeneratorContext> {
public:
    static std::shared_ptr<GeneratorContext> create(std::vector<GeneratorDecl> gens);

    std::size_t size() const { return gens_.size(); }
    const GeneratorDecl& gen(std::size_t i) const { return gens_[i]; }
    const std::vector<GeneratorDecl>& gens() const { return gens_; }

    /// Index of a generator by name, or -1.
    int index_of(const std::string& name) const;

    /// gcd of the generator weights: every integer-exponent monomial has
    /// weight a multiple of this.
    const Rational& weight_step() const { return step_; }

    // Derivation data (g^dagger per generator). Set-once; validated in context.cpp.
    void set_logderiv(std::size_t i, const Series& ld);
    bool has_derivation() const;
    const Series& logderiv(std::size_t i) const;

    ~GeneratorContext();

private:
    GeneratorContext() = default;
    std::vector<GeneratorDecl> gens_;
    std::vector<std::shared_ptr<const Series>> logderivs_;
    Rational step_;
};

} // namespace hahn
