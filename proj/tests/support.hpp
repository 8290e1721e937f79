#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "vkb/diagram.hpp"
#include "vkb/ribbon.hpp"

namespace support {

inline std::string corpus_path(const std::string& name) { return std::string(VKB_CORPUS_DIR) + "/" + name; }

inline std::string read_corpus(const std::string& name) {
  std::ifstream f(corpus_path(name));
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

inline vkb::VirtualLinkDiagram diagram(const std::string& name) { return vkb::parse_diagram(read_corpus(name)); }
inline vkb::RibbonGraph ribbon(const std::string& name) { return vkb::parse_ribbon(read_corpus(name)); }

}  // namespace support
