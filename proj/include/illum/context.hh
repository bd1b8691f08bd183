#ifndef ILLUM_CONTEXT_HH
#define ILLUM_CONTEXT_HH

// A Context fixes an ordered list of variable names. Polynomials carry a
// shared Context; two polynomials interoperate when their contexts list the
// same names in the same order. The library's standard rings are provided as
// cached factories.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace illum {

inline constexpr int kMaxVars = 8;

class Context;
using ContextPtr = std::shared_ptr<const Context>;

class Context {
public:
    explicit Context(std::vector<std::string> vars) : vars_(std::move(vars)) {
        if (vars_.empty() || static_cast<int>(vars_.size()) > kMaxVars)
            throw std::logic_error("Context: arity out of range");
        for (size_t i = 0; i < vars_.size(); ++i)
            for (size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j])
                    throw std::logic_error("Context: duplicate variable " + vars_[i]);
    }

    int arity() const { return static_cast<int>(vars_.size()); }
    const std::string& name(int i) const { return vars_.at(static_cast<size_t>(i)); }
    const std::vector<std::string>& names() const { return vars_; }

    std::optional<int> index(std::string_view name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return std::nullopt;
    }

    bool same_as(const Context& o) const { return vars_ == o.vars_; }

    static ContextPtr of(std::vector<std::string> vars) {
        return std::make_shared<const Context>(std::move(vars));
    }

    // Standard rings. Coordinates come first, auxiliary point/parameter
    // variables after, matching the order used everywhere in the library.
    static const ContextPtr& plane() {
        static ContextPtr c = of({"x", "y"});
        return c;
    }
    static const ContextPtr& space() {
        static ContextPtr c = of({"x", "y", "z"});
        return c;
    }
    static const ContextPtr& coords(int dim) {
        if (dim == 2) return plane();
        if (dim == 3) return space();
        throw std::logic_error("Context: dim must be 2 or 3");
    }
    // Incidence ring for the 3-D tangent-cone system: surface point Q and
    // line parameter a alongside the ambient coordinates.
    static const ContextPtr& cone_space() {
        static ContextPtr c = of({"x", "y", "z", "q1", "q2", "q3", "a"});
        return c;
    }
    static const ContextPtr& cone_plane() {
        static ContextPtr c = of({"x", "y", "q1", "q2", "a"});
        return c;
    }

    // Same variables plus the homogenization variable "w" at the end.
    static ContextPtr homogenized(const ContextPtr& base) {
        if (base->index("w")) throw std::logic_error("Context: already has w");
        std::vector<std::string> v = base->names();
        v.push_back("w");
        return of(std::move(v));
    }

private:
    std::vector<std::string> vars_;
};

inline bool same_context(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && a->same_as(*b));
}

} // namespace illum

#endif // ILLUM_CONTEXT_HH
