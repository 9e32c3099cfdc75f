#include "powerindex/configuration.hpp"

#include <boost/functional/hash.hpp>

#include "powerindex/error.hpp"

namespace powerindex {

Configuration::Configuration(std::size_t size, Strategy fill)
    : bits_(size) {
  if (fill == Strategy::kCollaborator) bits_.set();
}

Configuration Configuration::from_string(std::string_view text) {
  Configuration c(text.size());
  for (std::size_t v = 0; v < text.size(); ++v) {
    switch (text[v]) {
      case 'C':
        c.bits_.set(v);
        break;
      case 'D':
        break;
      default:
        throw ConfigurationError("configuration strings use only 'C' and 'D'; "
                                 "found '" + std::string(1, text[v]) +
                                 "' at index " + std::to_string(v));
    }
  }
  return c;
}

Configuration Configuration::from_bits(std::size_t size, std::uint64_t bits) {
  if (size > 64) {
    throw ConfigurationError("from_bits supports at most 64 vertices");
  }
  Configuration c(size);
  for (std::size_t v = 0; v < size; ++v) {
    if ((bits >> v) & 1U) c.bits_.set(v);
  }
  return c;
}

std::string Configuration::to_string() const {
  std::string out(size(), 'D');
  for (std::size_t v = 0; v < size(); ++v) {
    if (bits_.test(v)) out[v] = 'C';
  }
  return out;
}

Configuration Configuration::complement() const {
  Configuration c = *this;
  c.bits_.flip();
  return c;
}

void Configuration::require_fits(const Graph& g) const {
  if (size() != g.vertex_count()) {
    throw ConfigurationError("configuration has " + std::to_string(size()) +
                             " entries but the graph has " +
                             std::to_string(g.vertex_count()) + " vertices");
  }
}

std::size_t Configuration::hash() const {
  return boost::hash<decltype(bits_)>{}(bits_);
}

}  // namespace powerindex
