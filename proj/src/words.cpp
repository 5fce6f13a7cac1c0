#include <cctype>
#include <string>

#include "drgcay/group.hpp"

namespace drgcay {

FiniteGroup::Element evaluate_word(const FiniteGroup& g, const Word& w) {
  FiniteGroup::Element x = g.identity();
  for (const auto& [name, exponent] : w.letters) {
    auto gen = g.generator(name);
    if (!gen) {
      // `e` names the identity unless the group has a generator called e.
      if (name == "e") continue;
      throw std::invalid_argument("unknown generator name '" + name + "' for group " + g.tag());
    }
    x = g.mul(x, g.pow(*gen, exponent));
  }
  return x;
}

std::vector<Word> parse_words(std::string_view text) {
  std::vector<Word> out;
  Word current;
  bool saw_letter = false;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto integer = [&]() -> std::int64_t {
    const std::size_t start = pos;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      negative = text[pos] == '-';
      ++pos;
    }
    const std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (digits == pos) throw ParseError("expected an exponent", start);
    if (pos - digits > 9) throw ParseError("exponent too large", start);
    const std::int64_t v = std::stoll(std::string(text.substr(digits, pos - digits)));
    return negative ? -v : v;
  };
  while (true) {
    skip_ws();
    if (pos >= text.size() || text[pos] == ',') {
      if (!saw_letter) throw ParseError("empty word", pos);
      out.push_back(std::move(current));
      current = Word{};
      saw_letter = false;
      if (pos >= text.size()) break;
      ++pos;
      continue;
    }
    bool inverted = false;
    if (text[pos] == '-') {
      inverted = true;
      ++pos;
      skip_ws();
    }
    if (pos >= text.size() || !std::islower(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected a generator name", pos);
    }
    std::string name(1, text[pos++]);
    if (name == "g") {
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) name += text[pos++];
    }
    std::int64_t exponent = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_ws();
      exponent = integer();
    }
    current.letters.emplace_back(std::move(name), inverted ? -exponent : exponent);
    saw_letter = true;
  }
  return out;
}

}  // namespace drgcay
