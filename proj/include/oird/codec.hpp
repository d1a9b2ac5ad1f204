#pragma once
// Serialization for labelings.
//
// Grid text: n lines, each exactly m characters from {0,1,2}, one line per
// row, newline-terminated.  Record: a JSON document {"n":..,"m":..,
// "labels":[[..],..]}.  Weight and validity are always recomputed, never
// stored.

#include <string>
#include <string_view>

#include "oird/cylinder.hpp"

namespace oird {

class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

std::string encode_grid(const Labeling& f);
Labeling decode_grid(std::string_view text);

std::string encode_record(const Labeling& f);
Labeling decode_record(std::string_view json_text);

}  // namespace oird
