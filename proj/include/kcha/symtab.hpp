#ifndef KCHA_SYMTAB_HPP
#define KCHA_SYMTAB_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "kcha/errors.hpp"

namespace kcha {

/// Ordered variable universe of a multivariate polynomial: the three ring
/// variables lambda, mu, Q (always present, Laurent exponents allowed)
/// followed by chord variables (nonnegative exponents only).
class SymTab {
public:
    static constexpr int kLambda = 0;
    static constexpr int kMu = 1;
    static constexpr int kQ = 2;
    static constexpr int kRingVars = 3;

    static std::shared_ptr<const SymTab> make(std::vector<std::string> chords = {}) {
        return std::shared_ptr<const SymTab>(new SymTab(std::move(chords)));
    }

    int size() const { return static_cast<int>(names_.size()); }
    int chord_count() const { return size() - kRingVars; }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& names() const { return names_; }

    bool is_ring_var(int i) const { return i < kRingVars; }
    bool is_chord(int i) const { return i >= kRingVars; }

    /// Index of a variable, or -1 when absent.
    int find(const std::string& n) const {
        auto it = index_.find(n);
        return it == index_.end() ? -1 : it->second;
    }
    int require(const std::string& n) const {
        int i = find(n);
        if (i < 0) throw MathError("unknown variable '" + n + "'");
        return i;
    }

    friend bool operator==(const SymTab& a, const SymTab& b) { return a.names_ == b.names_; }
    friend bool operator!=(const SymTab& a, const SymTab& b) { return !(a == b); }

private:
    explicit SymTab(std::vector<std::string> chords) {
        names_ = {"lambda", "mu", "Q"};
        for (auto& c : chords) {
            if (c == "lambda" || c == "mu" || c == "Q")
                throw ValidationError("'" + c + "' is reserved for ring variables");
            names_.push_back(std::move(c));
        }
        for (int i = 0; i < size(); ++i) {
            if (!index_.emplace(names_[static_cast<std::size_t>(i)], i).second)
                throw ValidationError("duplicate variable '" + names_[static_cast<std::size_t>(i)] + "'");
        }
    }

    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

using SymTabPtr = std::shared_ptr<const SymTab>;

inline void check_same_symtab(const SymTabPtr& a, const SymTabPtr& b) {
    if (a == b) return;
    if (!a || !b || *a != *b) throw MathError("symtab mismatch");
}

} // namespace kcha

#endif
