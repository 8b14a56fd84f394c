#pragma once

#include "gcnn/mesh.hpp"

#include <filesystem>
#include <iosfwd>

namespace gcnn {

enum class MeshFormat { Off, Obj };

struct MeshParseError : std::runtime_error {
  MeshParseError(const std::string& what, int line, int column)
      : std::runtime_error(what + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        line(line),
        column(column) {}
  int line;
  int column;
};

// Picks the format from the file extension (.off / .obj, case-insensitive).
MeshFormat format_from_path(const std::filesystem::path& path);

Mesh load_mesh(const std::filesystem::path& path, MeshFormat format);
Mesh load_mesh(std::istream& in, MeshFormat format);

// Writers emit a fixed ASCII shape (doubles printed with %.17g, so re-reading
// recovers the arrays bit for bit and write(read(f)) == f for files produced
// here).
void save_mesh(const Mesh& mesh, const std::filesystem::path& path,
               MeshFormat format);
void save_mesh(const Mesh& mesh, std::ostream& out, MeshFormat format);

}  // namespace gcnn
