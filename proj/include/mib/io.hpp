#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mib/jordan.hpp"
#include "mib/polymat.hpp"

namespace mib::io {

struct ParseError : std::runtime_error {
  ParseError(std::size_t line, std::size_t col, const std::string& msg);
  std::size_t line, col;
};

// One line of integers; `shift`, `orders`, `abscissas`, `weights`, `multiplicity`.
struct Vector {
  std::string name;
  std::vector<Degree> values;
};
// Lines of integers; `gamma`, `points`, `support`.
struct Table {
  std::string name;
  std::vector<std::vector<u64>> rows;
};
// `vars`
struct Scalar {
  std::string name;
  u64 value;
};

using Item = std::variant<Matrix, PolyMatrix, JordanRep, Vector, Table, Scalar>;

struct Document {
  std::optional<PrimeField> field;
  std::vector<Item> items;

  const Matrix* matrix(std::size_t nth = 0) const;
  const PolyMatrix* polymat(std::size_t nth = 0) const;
  const JordanRep* jordan() const;
  const Vector* vector(const std::string& name, std::size_t nth = 0) const;
  std::vector<const Table*> tables(const std::string& name) const;
  const Scalar* scalar(const std::string& name) const;
};

Document parse(const std::string& text);
std::string serialize(const Document& doc);

Document read_file(const std::string& path);
void write_file(const std::string& path, const Document& doc);

}  // namespace mib::io
