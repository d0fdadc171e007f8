#include "cmono/characters.hpp"

#include "cmono/errors.hpp"

namespace cmono {

namespace {
long long mod_p(long long m, long long p) { return ((m % p) + p) % p; }
}  // namespace

BigInt Character::evaluate(long long i, long long m) const {
  const long long r = mod_p(m, basis_.p);
  if (r != 0) return coords_[basis_.index(i, r)];
  BigInt sum = 0;
  for (long long n = 1; n <= basis_.p - 1; ++n) sum += coords_[basis_.index(i, n)];
  return -sum;
}

Character& Character::operator+=(const Character& other) {
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
  return *this;
}

Character Character::scaled(const BigInt& k) const {
  Character out = *this;
  for (auto& c : out.coords_) c *= k;
  return out;
}

bool Character::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

Character Character::zeta_shift() const {
  Character out(basis_);
  for (long long i = 1; i <= basis_.h; ++i)
    for (long long n = 1; n <= basis_.p - 1; ++n)
      out.coords_[basis_.index(i, n)] = evaluate(i, n + 1);
  return out;
}

Character Character::zeta_shift(long long n) const {
  Character out = *this;
  for (long long k = 0; k < mod_p(n, basis_.p); ++k) out = out.zeta_shift();
  return out;
}

Character character_v(const GammaBasis& basis, long long i) {
  Character chi(basis);
  chi.coord(i, 1) = 1;  // the -1 at gamma_{i,i',0} is the relation slot
  return chi;
}

Character character_zeta_v(const GammaBasis& basis, long long i, long long n) {
  return character_v(basis, i).zeta_shift(n);
}

Character character_w(const GammaBasis& basis, const std::vector<long long>& support) {
  Character chi(basis);
  for (long long i : support) chi += character_v(basis, i);
  return chi;
}

FpCharacter FpCharacter::reduce(const Character& chi) {
  FpCharacter out(chi.basis());
  const long long p = chi.basis().p;
  for (std::size_t k = 0; k < chi.coords().size(); ++k)
    out.coords_[k] = static_cast<long long>(chi.coords()[k] % p);
  for (auto& c : out.coords_) c = ((c % p) + p) % p;
  return out;
}

long long FpCharacter::evaluate(long long i, long long m) const {
  const long long r = mod_p(m, basis_.p);
  if (r != 0) return coords_[basis_.index(i, r)];
  long long sum = 0;
  for (long long n = 1; n <= basis_.p - 1; ++n) sum += coords_[basis_.index(i, n)];
  return normalize(-sum);
}

FpCharacter& FpCharacter::operator+=(const FpCharacter& other) {
  for (std::size_t k = 0; k < coords_.size(); ++k)
    coords_[k] = normalize(coords_[k] + other.coords_[k]);
  return *this;
}

FpCharacter FpCharacter::scaled(long long k) const {
  FpCharacter out = *this;
  for (auto& c : out.coords_) c = normalize(c * (k % basis_.p));
  return out;
}

bool FpCharacter::is_zero() const {
  for (long long c : coords_)
    if (c != 0) return false;
  return true;
}

bool TateVector::toric_only() const {
  for (const auto& c : lattice)
    if (c != 0) return false;
  return true;
}

void TateVector::add_toric(long long i, long long n, const BigInt& k) {
  const long long r = ((n % basis.p) + basis.p) % basis.p;
  if (r <= basis.p - 2) {
    toric[toric_index(basis, i, r)] += k;
  } else {
    // zeta^{p-1} v_i = -(sum of the stored generators)
    for (long long s = 0; s <= basis.p - 2; ++s) toric[toric_index(basis, i, s)] -= k;
  }
}

Character TateVector::toric_character() const {
  Character chi(basis);
  for (long long i = 1; i <= basis.h; ++i)
    for (long long n = 0; n <= basis.p - 2; ++n) {
      const BigInt& c = toric[toric_index(basis, i, n)];
      if (c != 0) chi += character_zeta_v(basis, i, n).scaled(c);
    }
  return chi;
}

TateVector TateVector::zeta_shift() const {
  TateVector out(basis);
  for (long long i = 1; i <= basis.h; ++i)
    for (long long n = 0; n <= basis.p - 2; ++n) {
      const BigInt& c = toric[toric_index(basis, i, n)];
      if (c != 0) out.add_toric(i, n + 1, c);
    }
  // gamma_{i,i',m} -> gamma_{i,i',m+1} on the lattice part.
  Character chi(basis);
  for (long long i = 1; i <= basis.h; ++i)
    for (long long n = 1; n <= basis.p - 1; ++n) {
      const long long up = (n % basis.p == basis.p - 1) ? 0 : n + 1;
      // write gamma_{i,i',n+1} in basis coordinates: index n+1 unless n+1 = p,
      // which is the relation slot: gamma_{i,i',0} = -(sum of the block).
      const BigInt& c = lattice[basis.index(i, n)];
      if (c == 0) continue;
      if (up == 0) {
        for (long long s = 1; s <= basis.p - 1; ++s) chi.coord(i, s) -= c;
      } else {
        chi.coord(i, up) += c;
      }
    }
  out.lattice = chi.coords();
  return out;
}

TateVector toric_generator(const GammaBasis& basis, long long i, long long n) {
  TateVector v(basis);
  v.add_toric(i, n, 1);
  return v;
}

TateVector lattice_generator(const GammaBasis& basis, long long i, long long n) {
  TateVector v(basis);
  v.lattice[basis.index(i, n)] = 1;
  return v;
}

}  // namespace cmono
