#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "onemap/text.hpp"

namespace onemap {

enum class InputFormat { Auto, Plain, Fasta };

/// Plain input: the byte stream with trailing newline characters stripped.
/// FASTA: one Text per record, uppercased; non-ACGT symbols stay distinct
/// codes; records are never concatenated. Auto sniffs a leading '>'.
std::vector<Text> load_texts(std::istream& in, InputFormat format);

} // namespace onemap
