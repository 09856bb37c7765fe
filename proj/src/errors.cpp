#include "errors.hpp"

namespace metasir {

const char* errc_name(errc c)
{
    switch (c) {
        case errc::ok: return "ok";
        case errc::invalid_argument: return "invalid_argument";
        case errc::pole: return "pole";
        case errc::undefined: return "undefined";
        case errc::convergence: return "convergence";
        case errc::tail: return "tail";
        case errc::missing_moment: return "missing_moment";
        case errc::degenerate_moments: return "degenerate_moments";
        case errc::infeasible_moments: return "infeasible_moments";
        case errc::negative_moment_divergence: return "negative_moment_divergence";
        case errc::moment_does_not_exist: return "moment_does_not_exist";
        case errc::domain: return "domain";
        case errc::config: return "config";
        case errc::internal: return "internal";
    }
    return "unknown";
}

}  // namespace metasir
