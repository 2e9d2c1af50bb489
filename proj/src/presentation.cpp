#include "qhsp/presentation.hpp"

#include <cctype>
#include <map>

namespace qhsp {

Word parse_word(const std::string& s, int genus) {
  Word w;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    bool inv = std::isupper(static_cast<unsigned char>(c));
    char base = std::tolower(static_cast<unsigned char>(c));
    if (base != 'a' && base != 'b') throw ParseError("bad generator letter in word: " + s);
    ++i;
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw ParseError("missing generator index in word: " + s);
    int idx1 = std::stoi(s.substr(i, j - i));
    if (idx1 < 1 || idx1 > genus) throw ParseError("generator index out of range: " + s);
    int gen = 2 * (idx1 - 1) + (base == 'b' ? 1 : 0);
    w.letters.push_back(inv ? -(gen + 1) : gen + 1);
    i = j;
  }
  return w;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (int l : w.letters) {
    int gen = std::abs(l) - 1;
    char c = (gen % 2 == 0) ? 'a' : 'b';
    if (l < 0) c = std::toupper(c);
    s += c;
    s += std::to_string(gen / 2 + 1);
  }
  return s;
}

SurfacePresentation::SurfacePresentation(int g) : genus(g) {
  if (g < 1) throw DomainError("genus must be >= 1");
  for (int i = 0; i < g; ++i) {
    Word a = generator_word(2 * i), b = generator_word(2 * i + 1);
    relator = relator * commutator_word(a, b);
  }
}

std::string SurfacePresentation::generator_name(int idx) const {
  return word_to_string(generator_word(idx));
}

void SurfacePresentation::validate() const {
  if (int(relator.letters.size()) != 4 * genus)
    throw DomainError("relator length is not 4g");
  std::map<int, std::pair<int, int>> counts; // gen -> (positive, negative)
  for (int l : relator.letters) {
    int gen = std::abs(l) - 1;
    if (gen < 0 || gen >= num_generators()) throw DomainError("relator letter out of range");
    if (l > 0)
      counts[gen].first++;
    else
      counts[gen].second++;
  }
  for (int g = 0; g < num_generators(); ++g)
    if (counts[g] != std::make_pair(1, 1))
      throw DomainError("each generator must appear once straight and once inverted");
}

Word generator_word(int idx) { return Word({idx + 1}); }

Word commutator_word(const Word& x, const Word& y) {
  return x * y * x.inverse() * y.inverse();
}

} // namespace qhsp
