#ifndef FILTLEX_IO_H
#define FILTLEX_IO_H

#include <filesystem>
#include <fstream>

namespace filtlex {

// Both throw IoError naming the path when the file cannot be opened.
std::ifstream open_input(const std::filesystem::path& path);
std::ofstream open_output(const std::filesystem::path& path);

}  // namespace filtlex

#endif
