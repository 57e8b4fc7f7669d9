#include "ymcas/freelie.hpp"

#include <cstdlib>
#include <mutex>
#include <stdexcept>

#include "ymcas/errors.hpp"

namespace ymcas {

std::string word_str(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (int c : w) {
    if (c < 1 || c > 9)
      throw std::invalid_argument("word_str: letters outside 1..9 have no digit form");
    s.push_back(static_cast<char>('0' + c));
  }
  return s;
}

Word parse_word(const std::string& digits) {
  if (digits.empty()) throw std::invalid_argument("parse_word: empty word");
  Word w;
  w.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '9') throw std::invalid_argument("parse_word: expected digits 1..9");
    w.push_back(c - '0');
  }
  return w;
}

int degree_cap(int fallback) {
  static const int env_cap = [] {
    const char* s = std::getenv("YMCAS_DEGREE_CAP");
    if (s == nullptr || *s == '\0') return -1;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end == nullptr || *end != '\0' || v < 1 || v > 64)
      throw std::invalid_argument("YMCAS_DEGREE_CAP: expected an integer in 1..64");
    return static_cast<int>(v);
  }();
  return env_cap > 0 ? env_cap : fallback;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    // Compare w against its suffix starting at i.
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end()))
      return false;
  }
  return true;
}

std::vector<Word> lyndon_basis(int n, int j) {
  if (n < 1) throw std::invalid_argument("lyndon_basis: n must be positive");
  if (j < 1) throw std::invalid_argument("lyndon_basis: length must be positive");
  if (j > degree_cap(10))
    throw std::invalid_argument("lyndon_basis: length exceeds the degree cap");

  // Duval's generation of all Lyndon words of length <= j in lex order,
  // keeping those of length exactly j.
  std::vector<Word> out;
  Word w = {1};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == j) out.push_back(w);
    // Periodic extension to length j, then increment the last non-maximal
    // letter.
    Word t;
    t.reserve(j);
    for (int k = 0; k < j; ++k) t.push_back(w[k % w.size()]);
    while (!t.empty() && t.back() == n) t.pop_back();
    if (!t.empty()) ++t.back();
    w = std::move(t);
  }
  return out;
}

int BracketTree::word_degree() const {
  if (leaf > 0) return 1;
  return left->word_degree() + right->word_degree();
}

Word BracketTree::foliage() const {
  if (leaf > 0) return {leaf};
  Word w = left->foliage();
  Word r = right->foliage();
  w.insert(w.end(), r.begin(), r.end());
  return w;
}

std::string BracketTree::str() const {
  if (leaf > 0) return "x" + std::to_string(leaf);
  return "[" + left->str() + "," + right->str() + "]";
}

BracketTree tree_leaf(int i) {
  if (i < 1) throw std::invalid_argument("tree_leaf: generator index must be positive");
  BracketTree t;
  t.leaf = i;
  return t;
}

BracketTree tree_node(BracketTree l, BracketTree r) {
  BracketTree t;
  t.left = std::make_shared<const BracketTree>(std::move(l));
  t.right = std::make_shared<const BracketTree>(std::move(r));
  return t;
}

BracketTree standard_bracketing(const Word& w) {
  if (!is_lyndon(w)) throw std::invalid_argument("standard_bracketing: word is not Lyndon");
  if (w.size() == 1) return tree_leaf(w[0]);
  // Longest proper Lyndon suffix; it exists (the last letter qualifies).
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v(w.begin() + i, w.end());
    if (!is_lyndon(v)) continue;
    Word u(w.begin(), w.begin() + i);
    return tree_node(standard_bracketing(u), standard_bracketing(v));
  }
  throw consistency_error("standard_bracketing: no Lyndon suffix found");
}

Tensor tensor_concat(const Tensor& a, const Tensor& b) {
  Tensor r;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      Rational c = r[w] += ca * cb;
      if (c.is_zero()) r.erase(w);
    }
  return r;
}

Tensor tensor_add(const Tensor& a, const Tensor& b) {
  Tensor r = a;
  for (const auto& [w, c] : b) {
    Rational s = r[w] += c;
    if (s.is_zero()) r.erase(w);
  }
  return r;
}

Tensor tensor_scale(const Rational& c, const Tensor& a) {
  Tensor r;
  if (c.is_zero()) return r;
  for (const auto& [w, cw] : a) r.emplace(w, c * cw);
  return r;
}

Tensor to_tensor(const BracketTree& t) {
  if (t.leaf > 0) return {{Word{t.leaf}, Rational(1)}};
  Tensor l = to_tensor(*t.left);
  Tensor r = to_tensor(*t.right);
  return tensor_add(tensor_concat(l, r), tensor_scale(Rational(-1), tensor_concat(r, l)));
}

const Tensor& lyndon_tensor(const Word& w) {
  static std::map<Word, Tensor> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(w);
  if (it == cache.end())
    it = cache.emplace(w, to_tensor(standard_bracketing(w))).first;
  return it->second;
}

bool FreeLieElement::is_homogeneous() const {
  if (terms.empty()) return true;
  std::size_t d = terms.begin()->first.size();
  for (const auto& [w, c] : terms)
    if (w.size() != d) return false;
  return true;
}

int FreeLieElement::degree() const {
  if (terms.empty()) return 0;
  if (!is_homogeneous())
    throw std::logic_error("FreeLieElement::degree: element mixes degrees");
  return static_cast<int>(terms.begin()->first.size());
}

FreeLieElement lie_zero(int n) { return FreeLieElement{n, {}}; }

FreeLieElement lie_generator(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("lie_generator: index out of range");
  return FreeLieElement{n, {{Word{i}, Rational(1)}}};
}

FreeLieElement lie_word(int n, const Word& w) {
  if (!is_lyndon(w)) throw std::invalid_argument("lie_word: word is not Lyndon");
  for (int c : w)
    if (c < 1 || c > n) throw std::invalid_argument("lie_word: letter out of range");
  return FreeLieElement{n, {{w, Rational(1)}}};
}

FreeLieElement lie_add(const FreeLieElement& a, const FreeLieElement& b) {
  if (a.n != b.n) throw std::invalid_argument("lie_add: generator count mismatch");
  FreeLieElement r = a;
  for (const auto& [w, c] : b.terms) {
    Rational s = r.terms[w] += c;
    if (s.is_zero()) r.terms.erase(w);
  }
  return r;
}

FreeLieElement lie_scale(const Rational& c, const FreeLieElement& a) {
  FreeLieElement r{a.n, {}};
  if (c.is_zero()) return r;
  for (const auto& [w, cw] : a.terms) r.terms.emplace(w, c * cw);
  return r;
}

FreeLieElement from_tensor(int n, const Tensor& t) {
  for (const auto& [w, c] : t) {
    if (w.empty()) throw std::invalid_argument("from_tensor: empty word in tensor");
    if (w.size() != t.begin()->first.size())
      throw std::invalid_argument("from_tensor: tensor mixes degrees");
    for (int letter : w)
      if (letter < 1 || letter > n)
        throw std::invalid_argument("from_tensor: letter out of range");
  }
  // The expansion of a Lyndon bracketing is its word plus lex-larger words,
  // so repeatedly stripping the lex-smallest term is triangular and
  // terminates. A non-Lyndon leading word cannot be cancelled by any basis
  // vector, which is exactly the "outside the Lie subspace" failure.
  Tensor rest = t;
  FreeLieElement out{n, {}};
  while (!rest.empty()) {
    Word w = rest.begin()->first;
    if (!is_lyndon(w))
      throw consistency_error("from_tensor: element is outside the Lie subspace");
    Rational c = rest.begin()->second;
    out.terms.emplace(w, c);
    rest = tensor_add(rest, tensor_scale(-c, lyndon_tensor(w)));
  }
  return out;
}

Tensor to_tensor(const FreeLieElement& a) {
  Tensor r;
  for (const auto& [w, c] : a.terms)
    r = tensor_add(r, tensor_scale(c, lyndon_tensor(w)));
  return r;
}

FreeLieElement lie_bracket(const FreeLieElement& a, const FreeLieElement& b) {
  if (a.n != b.n) throw std::invalid_argument("lie_bracket: generator count mismatch");
  // Split by degree so each from_tensor call sees a homogeneous element.
  std::map<std::size_t, Tensor> ta, tb;
  for (const auto& [w, c] : a.terms)
    ta[w.size()] = tensor_add(ta[w.size()], tensor_scale(c, lyndon_tensor(w)));
  for (const auto& [w, c] : b.terms)
    tb[w.size()] = tensor_add(tb[w.size()], tensor_scale(c, lyndon_tensor(w)));

  FreeLieElement out{a.n, {}};
  for (const auto& [da, xa] : ta)
    for (const auto& [db, xb] : tb) {
      Tensor comm = tensor_add(tensor_concat(xa, xb),
                               tensor_scale(Rational(-1), tensor_concat(xb, xa)));
      out = lie_add(out, from_tensor(a.n, comm));
    }
  return out;
}

FreeLieElement lie_eval(int n, const BracketTree& t) {
  if (t.leaf > 0) return lie_generator(n, t.leaf);
  return lie_bracket(lie_eval(n, *t.left), lie_eval(n, *t.right));
}

} // namespace ymcas
