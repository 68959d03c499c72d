#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace srginv::cli {

/// Exit codes: 0 success / all distinguished, 2 unresolved pairs remain
/// (or a compare found no difference), 1 usage or data error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace srginv::cli
