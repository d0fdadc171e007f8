#pragma once

#include <string>
#include <vector>

#include "cmono/rational.hpp"

namespace cmono {

// Basis {gamma_{i,i',n} : 1 <= i <= h, 1 <= n <= p-1} of the abelianized
// Schottky group, ordered (i,n) lexicographically.  The missing generator
// gamma_{i,i',0} is recovered from the relation
// gamma_{i,i',p-1} ... gamma_{i,i',0} = 1.
struct GammaBasis {
  long long p = 2;
  long long h = 1;

  long long size() const { return (p - 1) * h; }
  long long index(long long i, long long n) const { return (i - 1) * (p - 1) + (n - 1); }
  std::pair<long long, long long> label(long long idx) const {
    return {idx / (p - 1) + 1, idx % (p - 1) + 1};
  }
};

// Integer character on the basis above.  evaluate() extends to every
// generator gamma_{i,i',m} via the relation (the m = 0 slot carries minus
// the sum of the basis values of its block).
class Character {
 public:
  Character() = default;
  Character(GammaBasis basis) : basis_(basis), coords_(basis.size(), 0) {}

  const GammaBasis& basis() const { return basis_; }
  const std::vector<BigInt>& coords() const { return coords_; }
  BigInt& coord(long long i, long long n) { return coords_[basis_.index(i, n)]; }

  BigInt evaluate(long long i, long long m) const;

  Character& operator+=(const Character& other);
  friend Character operator+(Character a, const Character& b) { return a += b; }
  Character scaled(const BigInt& k) const;
  bool is_zero() const;

  // chi composed with gamma_{i,i',m} -> gamma_{i,i',m+1}; order p.
  Character zeta_shift() const;
  Character zeta_shift(long long n) const;

  friend bool operator==(const Character& a, const Character& b) {
    return a.coords_ == b.coords_;
  }

 private:
  GammaBasis basis_;
  std::vector<BigInt> coords_;
};

// chi_{v_i}: -1 at gamma_{i,i',0}, +1 at gamma_{i,i',1}, 0 elsewhere.
Character character_v(const GammaBasis& basis, long long i);
// chi_{zeta^n v_i} = chi_{v_i} shifted n times.
Character character_zeta_v(const GammaBasis& basis, long long i, long long n);
// chi_{w} = sum of chi_{v_i} over a support set.
Character character_w(const GammaBasis& basis, const std::vector<long long>& support);

// Character with values in Z/p on the same basis, same evaluation rule.
class FpCharacter {
 public:
  FpCharacter() = default;
  explicit FpCharacter(GammaBasis basis) : basis_(basis), coords_(basis.size(), 0) {}
  static FpCharacter reduce(const Character& chi);

  const GammaBasis& basis() const { return basis_; }
  const std::vector<long long>& coords() const { return coords_; }
  long long& coord(long long i, long long n) { return coords_[basis_.index(i, n)]; }

  long long evaluate(long long i, long long m) const;

  FpCharacter& operator+=(const FpCharacter& other);
  friend FpCharacter operator+(FpCharacter a, const FpCharacter& b) { return a += b; }
  FpCharacter scaled(long long k) const;
  bool is_zero() const;

  friend bool operator==(const FpCharacter& a, const FpCharacter& b) {
    return a.coords_ == b.coords_;
  }

 private:
  long long normalize(long long x) const {
    long long p = basis_.p;
    return ((x % p) + p) % p;
  }
  GammaBasis basis_;
  std::vector<long long> coords_;
};

// Element of the Tate module split into its toric part, written on the
// basis {zeta^n v_i : 1 <= i <= h, 0 <= n <= p-2} with
// zeta^{p-1} v_i = -(v_i + zeta v_i + ... + zeta^{p-2} v_i),
// and its image in the character lattice written on GammaBasis.
struct TateVector {
  GammaBasis basis;
  std::vector<BigInt> toric;    // size (p-1)h, index (i-1)(p-1) + n
  std::vector<BigInt> lattice;  // size (p-1)h on GammaBasis

  explicit TateVector(GammaBasis b)
      : basis(b), toric(b.size(), 0), lattice(b.size(), 0) {}

  static long long toric_index(const GammaBasis& b, long long i, long long n) {
    return (i - 1) * (b.p - 1) + n;
  }

  bool toric_only() const;
  // Adds k * zeta^n v_i to the toric part, reducing n mod p via the norm
  // relation when n = p-1.
  void add_toric(long long i, long long n, const BigInt& k);

  // The character of Gamma-bar induced by the toric part.
  Character toric_character() const;

  TateVector zeta_shift() const;  // acts on both parts
};

// Toric basis vector zeta^n v_i as a TateVector.
TateVector toric_generator(const GammaBasis& basis, long long i, long long n);
// Lattice basis vector gamma_{i,i',n} as a TateVector.
TateVector lattice_generator(const GammaBasis& basis, long long i, long long n);

}  // namespace cmono
