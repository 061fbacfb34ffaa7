#pragma once

// Minimal XML reader for the figure tests: checks well-formedness (balanced
// tags, quoted attributes) and pulls attributes out of elements by id.

#include <cctype>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace svg_probe {

struct Element {
  std::string name;
  std::map<std::string, std::string> attrs;
};

struct Document {
  bool well_formed = false;
  std::string error;
  std::vector<Element> elements;

  const Element* by_id(const std::string& id) const {
    for (const auto& e : elements) {
      auto it = e.attrs.find("id");
      if (it != e.attrs.end() && it->second == id) return &e;
    }
    return nullptr;
  }
  const Element* by_name(const std::string& name) const {
    for (const auto& e : elements) {
      if (e.name == name) return &e;
    }
    return nullptr;
  }
};

inline double num(const Element& e, const std::string& key) {
  return std::strtod(e.attrs.at(key).c_str(), nullptr);
}

inline Document parse(const std::string& text) {
  Document doc;
  std::vector<std::string> stack;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    doc.error = why + " at offset " + std::to_string(i);
    return doc;
  };
  bool seen_root = false;
  while (i < text.size()) {
    if (text[i] != '<') {
      if (text[i] == '&') {
        const auto semi = text.find(';', i);
        if (semi == std::string::npos || semi - i > 8) return fail("bad entity");
      }
      ++i;
      continue;
    }
    if (text.compare(i, 5, "<?xml") == 0) {
      const auto end = text.find("?>", i);
      if (end == std::string::npos) return fail("unterminated declaration");
      i = end + 2;
      continue;
    }
    if (text.compare(i, 2, "</") == 0) {
      const auto end = text.find('>', i);
      if (end == std::string::npos) return fail("unterminated end tag");
      const std::string name = text.substr(i + 2, end - i - 2);
      if (stack.empty() || stack.back() != name) return fail("mismatched </" + name + ">");
      stack.pop_back();
      i = end + 1;
      continue;
    }
    // start tag
    std::size_t p = i + 1;
    Element el;
    while (p < text.size() && !std::isspace(static_cast<unsigned char>(text[p])) && text[p] != '>' &&
           text[p] != '/') {
      el.name += text[p++];
    }
    if (el.name.empty()) return fail("empty tag name");
    if (stack.empty() && seen_root) return fail("second root element");
    seen_root = true;
    bool self_closing = false;
    while (true) {
      while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
      if (p >= text.size()) return fail("unterminated tag");
      if (text[p] == '>') {
        ++p;
        break;
      }
      if (text.compare(p, 2, "/>") == 0) {
        self_closing = true;
        p += 2;
        break;
      }
      std::string key;
      while (p < text.size() && text[p] != '=' && !std::isspace(static_cast<unsigned char>(text[p]))) {
        key += text[p++];
      }
      if (p >= text.size() || text[p] != '=' || p + 1 >= text.size() || text[p + 1] != '"') {
        return fail("attribute without quoted value");
      }
      const auto close = text.find('"', p + 2);
      if (close == std::string::npos) return fail("unterminated attribute");
      if (el.attrs.count(key)) return fail("duplicate attribute " + key);
      el.attrs[key] = text.substr(p + 2, close - p - 2);
      p = close + 1;
    }
    if (!self_closing) stack.push_back(el.name);
    doc.elements.push_back(std::move(el));
    i = p;
  }
  if (!stack.empty()) return fail("unclosed <" + stack.back() + ">");
  doc.well_formed = seen_root;
  return doc;
}

}  // namespace svg_probe
