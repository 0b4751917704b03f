#pragma once

#include <orderlab/words.hpp>

#include <vector>

namespace orderlab {

// Automorphism of a free group, stored by generator images (freely reduced).
struct FreeAuto {
  std::vector<Word> images;  // images[g] = image of generator g

  int rank() const { return (int)images.size(); }

  static FreeAuto identity(int rank) {
    FreeAuto a;
    for (int g = 0; g < rank; ++g) a.images.push_back(Word::letter(g, 1));
    return a;
  }

  Word apply(const Word& w) const {
    Word out;
    for (Sym s : w.syms) {
      const Word& img = images.at((std::size_t)sym_gen(s));
      Word piece = sym_sign(s) > 0 ? img : img.inverse();
      out.syms.insert(out.syms.end(), piece.syms.begin(), piece.syms.end());
    }
    return free_reduce(out);
  }

  FreeAuto after(const FreeAuto& inner) const {  // (*this) o inner
    FreeAuto out;
    for (const Word& w : inner.images) out.images.push_back(apply(w));
    return out;
  }

  friend bool operator==(const FreeAuto& a, const FreeAuto& b) {
    return a.images == b.images;
  }
};

}  // namespace orderlab
