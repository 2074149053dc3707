#pragma once

#include <stdexcept>
#include <string>

namespace dyckcells {

enum class errc {
  out_of_range,
  not_weakly_increasing,
  below_diagonal,
  malformed_word,
  not_interval_closed,
  degree_mismatch,
  not_symmetric,
  improper_coloring,
  shape_weight_mismatch,
  weight_mismatch,
  too_large,
  parse_error,
};

const char* errc_name(errc c) noexcept;

// Single exception type for every domain error in the library. code()
// identifies the violated precondition, what() carries a witness.
class error : public std::runtime_error {
 public:
  error(errc c, const std::string& witness);
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc c, const std::string& witness);

}  // namespace dyckcells
