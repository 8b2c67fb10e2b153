#include "divtop/text.hpp"

#include <cctype>
#include <map>

namespace divtop {

namespace {

std::string signed_pair(const BigInt& a, const BigInt& b, char symbol) {
  if (b == 0) return a.str();
  if (a == 0) return b.str() + symbol;
  std::string out = a.str();
  out += b < 0 ? "-" : "+";
  out += BigInt(abs(b)).str();
  out += symbol;
  return out;
}

// Replaces U+2212 MINUS SIGN with '-' and drops ASCII whitespace.
std::string clean(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      out.push_back(text[i]);
    }
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string text) : text_(std::move(text)) {}

  bool done() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect_end() const {
    if (!done()) fail("unexpected character '" + std::string(1, peek()) + "'");
  }
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(pos_, message); }

  std::optional<BigInt> digits() {
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) return std::nullopt;
    return BigInt(text_.substr(start, pos_ - start));
  }

  // Optional sign; returns -1 or +1.
  int sign() {
    if (accept('-')) return -1;
    accept('+');
    return 1;
  }

 private:
  std::string text_;
  std::size_t pos_ = 0;
};

// a, bS, a+bS, a-bS, +-S with S the adjoined symbol.
std::pair<BigInt, BigInt> parse_pair(std::string_view raw, char symbol) {
  Cursor cur(clean(raw));
  if (cur.done()) cur.fail("empty element");
  BigInt real = 0, imag = 0;
  bool have_real = false, have_imag = false;
  bool first = true;
  while (!cur.done()) {
    int s = 1;
    if (first) {
      s = cur.sign();
    } else if (cur.accept('-')) {
      s = -1;
    } else if (!cur.accept('+')) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    auto value = cur.digits();
    if (cur.accept(symbol)) {
      if (have_imag) cur.fail(std::string("repeated ") + symbol + " term");
      imag = s * value.value_or(1);
      have_imag = true;
    } else {
      if (!value) cur.fail("expected digits");
      if (have_real) cur.fail("repeated rational term");
      real = s * *value;
      have_real = true;
    }
  }
  return {real, imag};
}

RingElement parse_polynomial(std::string_view raw, std::uint32_t modulus) {
  Cursor cur(clean(raw));
  if (cur.done()) cur.fail("empty polynomial");
  std::map<std::uint64_t, std::int64_t> terms;
  bool first = true;
  while (!cur.done()) {
    int s = 1;
    if (first) {
      s = cur.sign();
    } else if (cur.accept('-')) {
      s = -1;
    } else if (!cur.accept('+')) {
      cur.fail("expected '+' or '-'");
    }
    first = false;
    auto coeff = cur.digits();
    if (coeff) cur.accept('*');
    std::uint64_t degree = 0;
    if (cur.accept('x')) {
      degree = 1;
      if (cur.accept('^')) {
        auto d = cur.digits();
        if (!d) cur.fail("expected exponent");
        if (*d > 4096) cur.fail("exponent too large");
        degree = static_cast<std::uint64_t>(*d);
      }
    } else if (!coeff) {
      cur.fail("expected coefficient or x");
    }
    const BigInt c = coeff.value_or(1) % modulus;
    terms[degree] += s * static_cast<std::int64_t>(c);
  }
  std::vector<std::int64_t> coeffs(terms.rbegin()->first + 1, 0);
  for (const auto& [d, c] : terms) coeffs[d] = c;
  return RingElement::polynomial(coeffs, modulus);
}

RingElement parse_valuation(std::string_view raw, std::uint64_t prime) {
  Cursor cur(clean(raw));
  if (cur.done()) cur.fail("empty element");
  std::uint64_t unit = 1;
  auto leading = cur.digits();
  if (leading && cur.done()) {
    if (*leading == 0) return RingElement::valuation_zero(prime);
    // a bare integer is u * p^k with p not dividing u
    BigInt n = *leading;
    std::uint64_t k = 0;
    while (n % prime == 0) {
      n /= prime;
      ++k;
    }
    return RingElement::valuation(prime, k, static_cast<std::uint64_t>(n % prime));
  }
  if (leading) {
    if (cur.accept('*')) {
      if (*leading % prime == 0) cur.fail("unit residue divisible by p");
      unit = static_cast<std::uint64_t>(*leading % prime);
      leading = cur.digits();
    } else if (*leading != prime) {
      cur.fail("base must be p or " + std::to_string(prime));
    }
  }
  if (!leading && !cur.accept('p')) cur.fail("expected p");
  if (leading && *leading != prime) cur.fail("base must be p or " + std::to_string(prime));
  std::uint64_t k = 1;
  if (cur.accept('^')) {
    auto e = cur.digits();
    if (!e) cur.fail("expected exponent");
    if (*e > 1000000) cur.fail("exponent too large");
    k = static_cast<std::uint64_t>(*e);
  }
  cur.expect_end();
  return RingElement::valuation(prime, k, unit);
}

std::string poly_text(const PolyFpValue& v) {
  if (v.coeffs.empty()) return "0";
  std::string out;
  for (std::size_t d = v.coeffs.size(); d-- > 0;) {
    const auto c = v.coeffs[d];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (d == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "x";
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

std::string valuation_text(const ValPValue& v) {
  if (!v.exponent) return "0";
  if (*v.exponent == 0) return std::to_string(v.unit);
  std::string out = v.unit == 1 ? "" : std::to_string(v.unit) + "*";
  return out + "p^" + std::to_string(*v.exponent);
}

std::uint64_t require_prime(const RingDescriptor& ring) {
  if (!ring.prime) throw Error(ErrorCode::ModulusMissing, "ring requires a prime parameter (--p)");
  return *ring.prime;
}

}  // namespace

std::string to_text(const RingElement& e) {
  switch (e.tag()) {
    case RingTag::Int: return e.as<IntValue>().value.str();
    case RingTag::Gauss: {
      const auto& g = e.as<GaussValue>();
      return signed_pair(g.re, g.im, 'i');
    }
    case RingTag::PolyFp: return poly_text(e.as<PolyFpValue>());
    case RingTag::ZSqrtM5: {
      const auto& z = e.as<ZSqrtM5Value>();
      return signed_pair(z.x, z.y, 's');
    }
    case RingTag::ValP: return valuation_text(e.as<ValPValue>());
  }
  return "?";
}

std::string to_text(const ClassId& c) { return to_text(c.rep()); }

RingElement parse_element(const RingDescriptor& ring, std::string_view text) {
  switch (ring.tag) {
    case RingTag::Int: {
      Cursor cur(clean(text));
      const int s = cur.sign();
      auto value = cur.digits();
      if (!value) cur.fail("expected digits");
      cur.expect_end();
      return RingElement::integer(s * *value);
    }
    case RingTag::Gauss: {
      auto [re, im] = parse_pair(text, 'i');
      return RingElement::gaussian(re, im);
    }
    case RingTag::PolyFp: return parse_polynomial(text, static_cast<std::uint32_t>(require_prime(ring)));
    case RingTag::ZSqrtM5: {
      auto [x, y] = parse_pair(text, 's');
      return RingElement::zsqrt_m5(x, y);
    }
    case RingTag::ValP: return parse_valuation(text, require_prime(ring));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown ring tag");
}

std::string_view ring_selector(RingTag tag) {
  switch (tag) {
    case RingTag::Int: return "z";
    case RingTag::Gauss: return "gauss";
    case RingTag::PolyFp: return "fp";
    case RingTag::ZSqrtM5: return "zs5";
    case RingTag::ValP: return "valp";
  }
  return "?";
}

RingDescriptor parse_ring_descriptor(std::string_view selector, std::optional<std::uint64_t> prime) {
  RingDescriptor d;
  if (selector == "z") {
    d.tag = RingTag::Int;
  } else if (selector == "gauss") {
    d.tag = RingTag::Gauss;
  } else if (selector == "fp") {
    d.tag = RingTag::PolyFp;
  } else if (selector == "zs5") {
    d.tag = RingTag::ZSqrtM5;
  } else if (selector == "valp") {
    d.tag = RingTag::ValP;
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown ring selector '" + std::string(selector) + "'");
  }
  if (d.tag == RingTag::PolyFp || d.tag == RingTag::ValP) {
    if (!prime) throw Error(ErrorCode::ModulusMissing, "ring '" + std::string(selector) + "' requires --p");
    d.prime = prime;
  }
  return d;
}

}  // namespace divtop
