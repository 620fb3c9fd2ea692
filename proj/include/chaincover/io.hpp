#pragma once

#include <string>

#include "chaincover/chain.hpp"
#include "chaincover/linalg.hpp"

namespace chaincover {

// Text formats (all codes are the integer element codes, 1-indexed columns):
//
//   matrix:   header "q=<base order> t=<ext degree> n=<cols> k=<rows>",
//             then k lines of n whitespace-separated codes.  Entries live at
//             the extension level of the (q, t) field; t=1 means base.
//   vectors:  one line of n codes per vector, no header (the field context
//             travels separately, usually via a matrix file).
//   chained:  the matrix format (t=1) followed by two trailer lines,
//             "d= d_1 ... d_k" and "perm= p_1 ... p_n".

std::string matrix_to_text(const CodeMatrix& m);
CodeMatrix matrix_from_text(const std::string& text);

std::string vectors_to_text(std::span<const FVector> vs);
std::vector<FVector> vectors_from_text(const std::string& text,
                                       FieldHandle field, Level level);

std::string chained_to_text(const ChainedMatrix& ch);
ChainedMatrix chained_from_text(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace chaincover
