#ifndef HG3_CLI_HPP
#define HG3_CLI_HPP

namespace hg3 {

/// Full command-line front end. Exit codes: 0 success/graphic/sound,
/// 1 non-graphic/unsound, 2 usage or I/O error, 3 fails_mod3,
/// 4 below_threshold/unknown, 5 internal inconsistency.
int run_cli(int argc, const char* const* argv);

}  // namespace hg3

#endif
