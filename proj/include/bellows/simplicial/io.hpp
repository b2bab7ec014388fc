#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "bellows/simplicial/chain.hpp"

namespace bellows {

/// Contents of a complex file:
/// {"vertices":[...], "cycle":[{"simplex":["u","v","w"],"coeff":1}, ...]}.
/// Each listed simplex is oriented by the order in which its vertices appear.
struct CycleData {
  std::vector<Vertex> vertices;
  Chain cycle;
};

CycleData parse_cycle_json(const std::string& text);
CycleData load_cycle(const std::filesystem::path& path);
std::string cycle_to_json(const CycleData& data);

/// Whole-file helpers that raise IoError.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace bellows
