#ifndef FRAMECERT_DIGEST_HPP
#define FRAMECERT_DIGEST_HPP

#include <string>
#include <string_view>

namespace framecert {

/// SHA-256 hex digest; used to bind certificates to their frame.
std::string sha256_hex(std::string_view data);

}  // namespace framecert

#endif
