// Acceptance suite: one PASS/FAIL line per criterion, each timed against its
// budget. Usage: divtop_acceptance <path-to-divtop-cli>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include <boost/multiprecision/miller_rabin.hpp>

#include "helpers.hpp"

using namespace divtop;
using namespace divtop::testing;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::vector<std::int64_t> sieve(std::int64_t n) {
  std::vector<bool> composite(static_cast<std::size_t>(n + 1));
  std::vector<std::int64_t> out;
  for (std::int64_t i = 2; i <= n; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

std::set<std::int64_t> int_divisors(std::int64_t n) {
  std::set<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.insert(d);
      out.insert(n / d);
    }
  }
  out.insert(n);
  return out;
}

std::set<std::int64_t> as_ints(const std::vector<ClassId>& cs) {
  std::set<std::int64_t> out;
  for (const auto& c : cs) out.insert(static_cast<std::int64_t>(c.rep().as<IntValue>().value));
  return out;
}

std::set<std::int64_t> as_ints(const PointSet& s) { return as_ints(s.members()); }

ClassId int_class(const Domain& z, std::int64_t n) { return canonical_class(z, RingElement::integer(n)); }

// Remainder of polynomial division over F_p, low degree first.
std::vector<std::int64_t> poly_mod(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den, std::int64_t p) {
  auto trim = [](std::vector<std::int64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(num);
  std::int64_t inv = 1;
  while (den.back() * inv % p != 1) ++inv;
  while (num.size() >= den.size()) {
    const std::int64_t q = num.back() * inv % p;
    const std::size_t shift = num.size() - den.size();
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] = ((num[shift + i] - q * den[i]) % p + p) % p;
    trim(num);
  }
  return num;
}

std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, std::int64_t p) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return out;
}

std::vector<std::int64_t> coeffs_of(const RingElement& e) {
  const auto& v = e.as<PolyFpValue>();
  return {v.coeffs.begin(), v.coeffs.end()};
}

// No monic polynomial of degree 1..deg/2 divides f.
bool poly_irreducible_oracle(const std::vector<std::int64_t>& f, std::int64_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::int64_t total = 1;
    for (std::size_t k = 0; k < d; ++k) total *= p;
    for (std::int64_t code = 0; code < total; ++code) {
      std::vector<std::int64_t> g(d + 1, 0);
      g[d] = 1;
      std::int64_t c = code;
      for (std::size_t k = 0; k < d; ++k, c /= p) g[k] = c % p;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<ClassId> random_seeds(const Domain& d, std::mt19937_64& rng, std::size_t n) {
  auto pick = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  const auto desc = d.descriptor();
  std::vector<ClassId> out;
  while (out.size() < n) {
    RingElement e = d.one();
    switch (desc.tag) {
      case RingTag::Int: e = RingElement::integer(pick(2, 10000)); break;
      case RingTag::Gauss: e = RingElement::gaussian(pick(-60, 60), pick(-60, 60)); break;
      case RingTag::ZSqrtM5: e = RingElement::zsqrt_m5(pick(-60, 60), pick(-25, 25)); break;
      case RingTag::PolyFp: {
        std::vector<std::int64_t> c(static_cast<std::size_t>(pick(2, 8)));
        for (auto& x : c) x = pick(0, static_cast<std::int64_t>(*desc.prime) - 1);
        e = RingElement::polynomial(c, static_cast<std::uint32_t>(*desc.prime));
        break;
      }
      case RingTag::ValP: e = RingElement::valuation(*desc.prime, static_cast<std::uint64_t>(pick(1, 40))); break;
    }
    if (!d.is_zero(e) && !d.is_unit(e)) out.push_back(canonical_class(d, e));
  }
  return out;
}

std::vector<DomainPtr> adapters() {
  return {make_int_domain(), make_gauss_domain(), make_zsqrt_m5_domain(), make_poly_fp_domain(2),
          make_poly_fp_domain(3), make_valuation_domain(2), make_valuation_domain(3)};
}

// --- criteria ------------------------------------------------------------------

std::string closure_formula() {
  auto z = make_int_domain();
  const std::array<std::int64_t, 4> seeds = {12, 36, 60, 210};
  std::size_t fragments = 0, points = 0, enumerated = 0;
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::vector<ClassId> s;
    for (unsigned i = 0; i < 4; ++i) {
      if (mask >> i & 1) s.push_back(int_class(*z, seeds[i]));
    }
    const Fragment f = build_fragment(z, s);
    ++fragments;
    std::vector<PointSet> opens;
    if (f.size() <= 16) {
      opens = enumerate_opens(f);
      for (const auto& o : opens) require(is_down_set_oracle(f, o), "enumerated set is not a down-set");
    }
    for (std::size_t p = 0; p < f.size(); ++p) {
      ++points;
      const std::int64_t a = static_cast<std::int64_t>(f.point(p).rep().as<IntValue>().value);
      const PointSet cl = closure(f, PointSet::of(f, std::vector<ClassId>{f.point(p)}));
      std::set<std::int64_t> multiples;
      for (const auto& q : f.points()) {
        const std::int64_t b = static_cast<std::int64_t>(q.rep().as<IntValue>().value);
        if (b % a == 0) multiples.insert(b);
      }
      require(as_ints(cl) == multiples, "closure differs from in-fragment multiples of " + std::to_string(a));
      if (f.size() > 12) continue;
      PointSet uni(f);
      for (const auto& o : opens) {
        if (!o.test(p)) uni = uni | o;
      }
      ++enumerated;
      require(cl == uni.complement(), "closure differs from complement of disjoint opens at " + std::to_string(a));
    }
  }
  return std::to_string(fragments) + " fragments, " + std::to_string(points) + " points, " +
         std::to_string(enumerated) + " checked against enumerated opens";
}

std::string isolated_irreducible() {
  auto z = make_int_domain();
  std::vector<ClassId> seeds;
  for (std::int64_t n = 2; n <= 100; ++n) seeds.push_back(int_class(*z, n));
  const Fragment f = build_fragment(z, seeds);
  const auto r = isolated_points(f);
  const auto primes = sieve(100);
  std::set<std::int64_t> iso;
  for (const auto& t : r.details["isolated"]) iso.insert(std::stoll(t.get<std::string>()));
  require(r.verdict == Verdict::Holds, "INT isolated check did not hold");
  require(iso == std::set<std::int64_t>(primes.begin(), primes.end()) && iso.size() == 25,
          "INT isolated points are not the 25 primes up to 100");

  auto zs = make_zsqrt_m5_domain();
  const Fragment f6 = frag(zs, {"6"});
  const auto r6 = isolated_points(f6);
  std::set<std::string> got;
  for (const auto& t : r6.details["isolated"]) got.insert(t.get<std::string>());
  require(got == std::set<std::string>{"2", "3", "1+1s", "1-1s"}, "ZSQRT_M5 isolated points of fragment(6)");
  require(is_irreducible(*zs, elem(*zs, "2")), "2 not irreducible in ZSQRT_M5");
  require(!divides(*zs, elem(*zs, "2"), elem(*zs, "1+1s")) && !divides(*zs, elem(*zs, "2"), elem(*zs, "1-1s")),
          "2 divides 1+-s");
  return "25 primes isolated in INT; {2,3,1+s,1-s} in ZSQRT_M5";
}

std::string nestedness() {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto v = make_valuation_domain(p);
    require(check_nested(v, classes(*v, {"p^20"})).verdict == Verdict::Holds,
            "VAL_P p=" + std::to_string(p) + " not nested");
  }
  const std::vector<std::pair<DomainPtr, std::string>> cases = {
      {make_int_domain(), "6"}, {make_gauss_domain(), "5"}, {make_poly_fp_domain(2), "x^2+x"}};
  for (const auto& [d, seed] : cases) {
    const auto r = check_nested(d, classes(*d, {seed}));
    require(r.verdict == Verdict::Fails && r.witnesses.size() == 2, "nested did not fail on " + seed);
    const auto& a = std::get<ClassId>(r.witnesses[0]);
    const auto& b = std::get<ClassId>(r.witnesses[1]);
    require(!divides(*d, a.rep(), b.rep()) && !divides(*d, b.rep(), a.rep()), "witness pair is comparable");
  }
  return "VAL_P p=2,3,5 nested; INT, GAUSS, POLY_FP witnesses incomparable";
}

std::string gcd_basis() {
  auto z = make_int_domain();
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::int64_t> pick(2, 10000);
  for (int t = 0; t < 500; ++t) {
    const std::int64_t a = pick(rng), b = pick(rng);
    const auto da = int_divisors(a), db = int_divisors(b);
    std::set<std::int64_t> common;
    std::set_intersection(da.begin(), da.end(), db.begin(), db.end(), std::inserter(common, common.end()));
    const std::int64_t g = std::gcd(a, b);
    require(common == (g == 1 ? std::set<std::int64_t>{} : int_divisors(g)), "oracle intersection law");
    const auto ia = divisor_classes(*z, RingElement::integer(a));
    const auto ib = divisor_classes(*z, RingElement::integer(b));
    std::vector<ClassId> lib;
    std::set_intersection(ia.begin(), ia.end(), ib.begin(), ib.end(), std::back_inserter(lib));
    require(as_ints(lib) == common, "library intersection differs");
    const auto r = basis_intersection(*z, int_class(*z, a), int_class(*z, b));
    require(r.verdict == Verdict::Holds, "basis_intersection failed");
  }
  std::uniform_int_distribution<std::int64_t> small(2, 300), mult(1, 12);
  for (int t = 0; t < 100; ++t) {
    const std::int64_t a = small(rng), b = small(rng);
    const std::int64_t c = std::lcm(a, b) * mult(rng);
    const auto r = lcm_containment(*z, int_class(*z, a), int_class(*z, b), int_class(*z, c));
    require(r.verdict == Verdict::Holds, "lcm containment failed");
    const auto dl = int_divisors(std::lcm(a, b)), dc = int_divisors(c);
    require(std::includes(dc.begin(), dc.end(), dl.begin(), dl.end()), "oracle lcm containment");
  }
  auto zs = make_zsqrt_m5_domain();
  const auto r = basis_intersection(*zs, cls(*zs, "6"), cls(*zs, "2+2s"));
  require(r.verdict == Verdict::WitnessProduced && r.details["basic"] == false, "ZSQRT_M5 pair not non-basic");
  return "500 pairs, 100 triples, ZSQRT_M5 (6, 2+2s) non-basic";
}

std::string t0_t1() {
  std::mt19937_64 rng(kSeed);
  std::size_t total = 0;
  for (const auto& d : adapters()) {
    for (int t = 0; t < 100; ++t) {
      const Fragment f = build_fragment(d, random_seeds(*d, rng, 1 + t % 2));
      require(check_t0(f).verdict == Verdict::Holds, "T0 failed on " + std::string(ring_tag_name(d->descriptor().tag)));
      ++total;
    }
  }
  auto z = make_int_domain();
  const auto r = t1_failure_witness(z, int_class(*z, 2));
  require(r.verdict == Verdict::WitnessProduced, "no T1 witness");
  require(std::get<ClassId>(r.witnesses.at(0)) == int_class(*z, 2) && std::get<ClassId>(r.witnesses.at(1)) == int_class(*z, 4),
          "T1 witness is not (2, 4)");
  const Fragment f4 = frag(z, {"4"});
  for (const auto& s : all_subsets(f4)) {
    if (is_down_set_oracle(f4, s) && s.contains(int_class(*z, 4))) {
      require(s.contains(int_class(*z, 2)), "open containing 4 misses 2");
    }
  }
  return std::to_string(total) + " random fragments T0; T1 witness (2, 4)";
}

std::string compact_chain() {
  std::mt19937_64 rng(kSeed);
  struct Start {
    DomainPtr d;
    std::string a;
  };
  const std::vector<Start> starts = {{make_int_domain(), "2"},       {make_gauss_domain(), "1+1i"},
                                     {make_zsqrt_m5_domain(), "2"},  {make_poly_fp_domain(2), "x"},
                                     {make_poly_fp_domain(3), "x"},  {make_valuation_domain(2), "p"},
                                     {make_valuation_domain(3), "p"}};
  for (const auto& [d, a] : starts) {
    for (const auto& x : random_seeds(*d, rng, 20)) {
      const RingElement sq = d->multiply(x.rep(), x.rep());
      require(!divides(*d, sq, x.rep()), "x^2 divides x for " + to_text(x));
      require(non_compact_witness(*d, x).verdict == Verdict::WitnessProduced, "no compactness witness");
    }
    const auto r = noetherian_chain(d, cls(*d, a), 32);
    std::vector<std::size_t> expect(32);
    std::iota(expect.begin(), expect.end(), 1);
    require(r.verdict == Verdict::WitnessProduced, "chain not strict");
    require(r.details["sizes"].get<std::vector<std::size_t>>() == expect,
            "chain sizes not 1..32 in " + std::string(ring_tag_name(d->descriptor().tag)));
  }
  return "7 adapters x 20 samples; chains of length 32";
}

std::string density_baire() {
  auto z = make_int_domain();
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::int64_t> pick(2, 1000000);
  std::vector<ClassId> samples;
  for (int t = 0; t < 200; ++t) samples.push_back(int_class(*z, pick(rng)));
  require(density_check(*z, samples).verdict == Verdict::Holds, "INT density failed");

  auto zs = make_zsqrt_m5_domain();
  std::vector<ClassId> zsamples;
  for (std::int64_t x = 0; x <= 100; ++x) {
    for (std::int64_t y = -44; y <= 44; ++y) {
      const std::int64_t n = x * x + 5 * y * y;
      if (n <= 1 || n > 10000 || !(x > 0 || (x == 0 && y > 0))) continue;
      zsamples.push_back(canonical_class(*zs, RingElement::zsqrt_m5(x, y)));
    }
  }
  require(density_check(*zs, zsamples).verdict == Verdict::Holds, "ZSQRT_M5 density failed");

  std::size_t fragments = 0;
  for (std::int64_t a = 2; a <= 60; ++a) {
    for (std::int64_t b = a; b <= 60; ++b) {
      std::vector<ClassId> s = {int_class(*z, a)};
      if (b != a) s.push_back(int_class(*z, b));
      const Fragment f = build_fragment(z, s);
      if (f.size() > 12) continue;
      require(dense_open_check(f).verdict == Verdict::Holds,
              "dense-open failed on {" + std::to_string(a) + "," + std::to_string(b) + "}");
      ++fragments;
    }
  }
  return "200 INT samples, " + std::to_string(zsamples.size()) + " ZSQRT_M5 classes, " + std::to_string(fragments) +
         " INT fragments";
}

std::string infinitude() {
  auto z = make_int_domain();
  PrimeList list = make_prime_list(*z, classes(*z, {"2", "3"}));
  for (const auto& s : prime_stream_steps(*z, list, 10)) {
    const BigInt q = s.prime.rep().as<IntValue>().value;
    const BigInt x = s.witness.as<IntValue>().value;
    BigInt tail = 1;
    for (std::size_t i = 1; i < list.members.size(); ++i) tail *= list.members[i].rep().as<IntValue>().value;
    BigInt power = 1;
    for (unsigned k = 0; k < s.m; ++k) power *= list.members[0].rep().as<IntValue>().value;
    require(x == power + tail, "INT witness differs from a1^m + tail");
    require(boost::multiprecision::miller_rabin_test(q, 40), "INT stream member not prime");
    require(x % q == 0, "prime does not divide witness");
    for (const auto& a : list.members) {
      require(x % a.rep().as<IntValue>().value != 0, "prior member divides witness");
      require(a != s.prime, "repeated prime");
    }
    list.members.push_back(s.prime);
  }
  require(list.members.size() == 12, "INT stream length");

  for (std::uint32_t p : {2u, 3u}) {
    auto f = make_poly_fp_domain(p);
    PrimeList pl = make_prime_list(*f, classes(*f, {"x"}));
    for (const auto& s : prime_stream_steps(*f, pl, 5)) {
      const auto q = coeffs_of(s.prime.rep());
      const auto x = coeffs_of(s.witness);
      std::vector<std::int64_t> tail = {1};
      for (std::size_t i = 1; i < pl.members.size(); ++i) tail = poly_mul(tail, coeffs_of(pl.members[i].rep()), p);
      std::vector<std::int64_t> sum = {1};
      for (unsigned k = 0; k < s.m; ++k) sum = poly_mul(sum, coeffs_of(pl.members[0].rep()), p);
      sum.resize(std::max(sum.size(), tail.size()), 0);
      for (std::size_t i = 0; i < tail.size(); ++i) sum[i] = (sum[i] + tail[i]) % p;
      while (!sum.empty() && sum.back() == 0) sum.pop_back();
      require(!sum.empty() && poly_mod(sum, x, p).empty() && poly_mod(x, sum, p).empty(),
              "POLY witness differs from a1^m + tail");
      require(poly_irreducible_oracle(q, p), "POLY stream member reducible");
      require(poly_mod(x, q, p).empty(), "POLY prime does not divide witness");
      for (const auto& a : pl.members) {
        require(!poly_mod(x, coeffs_of(a.rep()), p).empty(), "prior member divides POLY witness");
        require(a != s.prime, "repeated POLY prime");
      }
      pl.members.push_back(s.prime);
    }
  }
  return "INT 10 primes, POLY_FP p=2 and p=3 5 primes each";
}

std::string ultraconnected() {
  auto z = make_int_domain();
  const auto primes = sieve(400);
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
  for (int t = 0; t < 50; ++t) {
    std::int64_t a = 0, b = 0, c = 0;
    while (a == b || a == c || b == c) {
      a = primes[pick(rng)];
      b = primes[pick(rng)];
      c = primes[pick(rng)];
    }
    const auto ca = int_class(*z, a), cb = int_class(*z, b), cc = int_class(*z, c);
    const auto u = ultraconnected_witness(*z, ca, cb);
    require(u.verdict == Verdict::WitnessProduced && u.details["product"] == std::to_string(a * b), "ultra witness");
    const auto r = no_disjoint_nbhd_witness(z, ca, cb, cc);
    require(r.verdict == Verdict::WitnessProduced, "no-disjoint-nbhd witness not produced");
    const auto dab = int_divisors(a * b), dac = int_divisors(a * c);
    require(dab.count(a) && dab.count(b), "[ab] outside a closure");
    require(!dab.count(a * c) && !dac.count(a * b), "[ab], [ac] not separated");
    std::set<std::int64_t> meet;
    std::set_intersection(dab.begin(), dab.end(), dac.begin(), dac.end(), std::inserter(meet, meet.end()));
    const auto da = int_divisors(a);
    require(std::includes(meet.begin(), meet.end(), da.begin(), da.end()), "U_ab & U_ac misses U_a");
    std::set<std::int64_t> reported;
    for (const auto& s : r.details["neighbourhood_intersection"]) reported.insert(std::stoll(s.get<std::string>()));
    require(reported == meet, "reported intersection differs from oracle");
  }
  return "50 triples";
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) throw Failure{"cannot spawn " + cmd};
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

std::string determinism(const std::string& cli) {
  const std::vector<std::string> cmds = {
      "fragment --ring z --seeds 12,36,60,210 --out json",
      "fragment --ring z --seeds 210 --out dot",
      "check --ring z --seeds 12,36,60,210 --props t0,isolated",
      "check --ring zs5 --seeds 6 --props isolated",
      "check --ring valp --p 2 --seeds p^20 --props nested",
      "check --ring valp --p 5 --seeds p^20 --props nested",
      "check --ring z --seeds 6 --props nested",
      "check --ring gauss --seeds 5 --props nested",
      "check --ring fp --p 2 --seeds x^2+x --props nested",
      "check --ring z --seeds 12,18 --props gcd-intersection",
      "check --ring zs5 --seeds 6,2+2s --props gcd-intersection",
      "check --ring z --props t0,t1",
      "check --ring gauss --props t0,t1",
      "check --ring zs5 --props t0,t1",
      "check --ring fp --p 3 --props t0,t1",
      "check --ring valp --p 3 --props t0,t1",
      "check --ring z --seeds 2 --props compact,chain --n 32",
      "check --ring fp --p 2 --seeds x --props compact,chain --n 32",
      "check --ring z --seeds 720 --props density",
      "check --ring z --seeds 60 --props dense-open",
      "primes --ring z --start 2,3 --count 10",
      "primes --ring fp --p 2 --start x --count 5",
      "primes --ring fp --p 3 --start x --count 5",
      "check --ring z --seeds 2,3,5 --props ultra,sep-nbhd",
      "check --ring z",
  };
  for (const auto& c : cmds) {
    int s1 = 0, s2 = 0;
    const std::string a = run_capture(cli + " " + c, s1);
    const std::string b = run_capture(cli + " " + c, s2);
    require(s1 == 0 && s2 == 0, "non-zero exit: " + c);
    require(!a.empty() && a == b, "output differs between runs: " + c);
  }
  return std::to_string(cmds.size()) + " commands run twice";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: divtop_acceptance <divtop-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  struct Criterion {
    int id;
    std::string name;
    double budget_s;
    std::function<std::string()> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "closure formula", 1.0, closure_formula},
      {2, "isolated iff irreducible", 1.0, isolated_irreducible},
      {3, "nested iff valuation", 1.0, nestedness},
      {4, "gcd basis law", 5.0, gcd_basis},
      {5, "T0 everywhere, T1 witness", 5.0, t0_t1},
      {6, "non-compactness and chain", 1.0, compact_chain},
      {7, "density and dense opens", 10.0, density_baire},
      {8, "infinitude of primes", 5.0, infinitude},
      {9, "ultraconnected witnesses", 2.0, ultraconnected},
      {10, "determinism", 60.0, [&] { return determinism(cli); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string note;
    bool ok = true;
    try {
      note = c.body();
    } catch (const Failure& f) {
      ok = false;
      note = f.what;
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && secs >= c.budget_s) {
      ok = false;
      note += " (over time budget)";
    }
    failed += !ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << "criterion " << c.id << " [" << c.name << "]: " << (ok ? "PASS" : "FAIL") << " " << secs << "s / "
         << c.budget_s << "s - " << note;
    std::cout << line.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
