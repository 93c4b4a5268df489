#ifndef ARONBERNER_TENSOR_IO_HPP
#define ARONBERNER_TENSOR_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "aronberner/tensor.hpp"

namespace aronberner {

using AnyTensor = std::variant<TrilinearTensor, BilinearTensor>;

/// Inverse of to_string(Signature): "W* x X x Y -> Z*".
Signature parse_signature(std::string_view text);

// Tensor fixtures are JSON documents
//   {"arity": 3, "dims": [2, 2, 2, 2], "entries": [...], "sig": "X x Y x Z -> W"}
// with entries flattened row-major (last index fastest) and 0-based indices.
std::string to_json(const TrilinearTensor& t);
std::string to_json(const BilinearTensor& m);
std::string to_json(const AnyTensor& t);

AnyTensor tensor_from_json(std::string_view text);
AnyTensor read_tensor_file(const std::string& path);
void write_tensor_file(const std::string& path, const AnyTensor& t);

}  // namespace aronberner

#endif  // ARONBERNER_TENSOR_IO_HPP
