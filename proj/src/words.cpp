#include "hecke/words.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "hecke/perm.hpp"

namespace hecke {

namespace {

long mod_floor(long v, long m) {
  v %= m;
  return v < 0 ? v + m : v;
}

}  // namespace

Word::Word(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("Word: relation order must be positive");
}

Word Word::x(int n) {
  Word w(n);
  w.push(Syllable::Kind::X, 1);
  return w;
}

Word Word::y(int n, int k) {
  Word w(n);
  w.push(Syllable::Kind::Y, k);
  return w;
}

void Word::push(Syllable::Kind kind, long exp) {
  const long e = mod_floor(exp, kind == Syllable::Kind::X ? 2 : n_);
  if (e == 0) return;
  if (!s_.empty() && s_.back().kind == kind) {
    const long merged = mod_floor(s_.back().exp + e, kind == Syllable::Kind::X ? 2 : n_);
    if (merged == 0)
      s_.pop_back();
    else
      s_.back().exp = static_cast<int>(merged);
    return;
  }
  s_.push_back(Syllable{kind, static_cast<int>(e)});
}

Word Word::reduce(std::span<const RawToken> raw, int n) {
  Word w(n);
  for (const auto& t : raw) w.push(t.kind, t.exp);
  return w;
}

std::size_t Word::letter_length() const {
  std::size_t len = 0;
  for (const auto& s : s_) len += s.is_x() ? 1 : static_cast<std::size_t>(std::min(s.exp, n_ - s.exp));
  return len;
}

Word Word::inverse() const {
  Word w(n_);
  for (auto it = s_.rbegin(); it != s_.rend(); ++it) w.push(it->kind, it->is_x() ? 1 : -it->exp);
  return w;
}

Word& Word::operator*=(const Word& rhs) {
  if (rhs.n_ != n_) throw std::invalid_argument("Word: mismatched relation orders");
  for (const auto& s : rhs.s_) push(s.kind, s.exp);
  return *this;
}

std::string Word::to_string() const {
  if (s_.empty()) return "1";
  std::string out;
  for (const auto& s : s_) {
    if (!out.empty()) out += '.';
    if (s.is_x())
      out += 'x';
    else
      out += 'y' + std::to_string(s.exp);
  }
  return out;
}

Word Word::parse(std::string_view text, int n) {
  Word w(n);
  if (text.empty() || text == "1") return w;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    if (dot == std::string_view::npos) dot = text.size();
    std::string_view tok = text.substr(pos, dot - pos);
    if (tok.empty()) throw std::invalid_argument("word: empty token in \"" + std::string(text) + "\"");
    const char head = tok.front();
    if (head != 'x' && head != 'y') throw std::invalid_argument("word: unknown token \"" + std::string(tok) + "\"");
    long exp = 1;
    if (tok.size() > 1) {
      auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), exp);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument("word: bad exponent in \"" + std::string(tok) + "\"");
    }
    w.push(head == 'x' ? Syllable::Kind::X : Syllable::Kind::Y, exp);
    pos = dot + 1;
  }
  return w;
}

Mat2 eval_matrix(const Word& w, const HeckeGenerators& gens) {
  const HeckeIndex n = gens.x.index();
  if (w.order() != n.value())
    throw std::invalid_argument("eval_matrix: word relation order differs from the Hecke index");
  // Powers of y are cheap to tabulate and reused for every syllable.
  std::vector<Mat2> ypow{Mat2::identity(n), gens.y};
  for (int k = 2; k < n.value(); ++k) ypow.push_back(ypow.back() * gens.y);
  Mat2 acc = Mat2::identity(n);
  for (const auto& s : w.syllables()) acc = acc * (s.is_x() ? gens.x : ypow[static_cast<std::size_t>(s.exp)]);
  return acc;
}

Mat2 eval_matrix(const Word& w) { return eval_matrix(w, hecke_generators(HeckeIndex(w.order()))); }

Dart act(Dart point, const Word& w, const Perm& sigma0, const Perm& sigma1) {
  for (const auto& s : w.syllables()) {
    if (s.is_x()) {
      point = sigma0(point);
    } else {
      for (int k = 0; k < s.exp; ++k) point = sigma1(point);
    }
  }
  return point;
}

Perm eval_perm(const Word& w, const Perm& sigma0, const Perm& sigma1) {
  if (sigma0.degree() != sigma1.degree()) throw std::invalid_argument("eval_perm: degree mismatch");
  if (!(sigma0 * sigma0).is_identity()) throw std::invalid_argument("eval_perm: sigma0^2 is not the identity");
  if (!sigma1.pow(w.order()).is_identity())
    throw std::invalid_argument("eval_perm: sigma1^" + std::to_string(w.order()) + " is not the identity");
  Perm acc(sigma0.degree());
  for (const auto& s : w.syllables()) acc = acc * (s.is_x() ? sigma0 : sigma1.pow(s.exp));
  return acc;
}

}  // namespace hecke
