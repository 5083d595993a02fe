#pragma once

#include <stdexcept>
#include <string>

namespace mcgl {

enum class errc {
    invalid_input,     // malformed pairing, curve, file, flag
    parse_error,       // text format violation
    sphere_input,      // genus-0 surface fed to a theorem operation
    no_same_half_pair, // general construction inapplicable
    adjacent_only,     // all minimal same-half pairs adjacent
    pairing_mismatch,  // symplectic completion: form values differ
    not_primitive,     // symplectic completion: non-primitive vector
    no_completion,     // symplectic completion: pairs not equivalent
    missing_rule,      // word rewriting: rule set incomplete
    conflicting_rule,  // word rewriting: two targets for one (map, source)
    internal           // broken invariant; indicates a bug
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void check(bool ok, errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

}  // namespace mcgl
