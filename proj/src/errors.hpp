#pragma once

#include <stdexcept>
#include <string>

namespace metasir {

enum class errc {
    ok = 0,
    invalid_argument,
    pole,
    undefined,
    convergence,
    tail,
    missing_moment,
    degenerate_moments,
    infeasible_moments,
    negative_moment_divergence,
    moment_does_not_exist,
    domain,
    config,
    internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg)
{
    throw Error(code, msg);
}

}  // namespace metasir
