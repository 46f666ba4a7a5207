#pragma once

namespace ntcwla {

// Full command-line entry point. Returns 0 on success, 1 on validation
// errors, 2 on runtime errors.
int cli_main(int argc, const char* const* argv);

}  // namespace ntcwla
