#include "stdpuzzle/theorems.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "stdpuzzle/counting.hpp"
#include "stdpuzzle/sequences.hpp"
#include "stdpuzzle/transforms.hpp"

namespace stdpuzzle {

namespace {

using R = Rational;

R q(const BigInt& num, const BigInt& den) {
  R r(num, den);
  r.canonicalize();
  return r;
}

BigInt df(long k) { return double_factorial(k); }
BigInt C(long a, long b) { return binomial(a, b); }
BigInt pow2(long k) {
  BigInt r = 1;
  r <<= static_cast<mp_bitcnt_t>(k);
  return r;
}
// C(k) of the Catalan families: s_k({A2,A3}).
BigInt Cs(long k) { return catalan(k + 1); }

PieceId A(int i) { return piece_id(PieceClass::A, i); }
PieceId B(int i) { return piece_id(PieceClass::B, i); }
PieceId Cp(int i) { return piece_id(PieceClass::C, i); }
PieceId D(int i) { return piece_id(PieceClass::D, i); }

void check_index(int i) {
  if (i < 1 || i > 6) throw std::out_of_range("converter index must be 1..6");
}
void check_n(int n, int min_n) {
  if (n < min_n) throw std::domain_error("n must be >= " + std::to_string(min_n));
}

}  // namespace

// ---------------------------------------------------------------------------

const std::array<SimplePieceRow, 20>& simple_piece_rows() {
  static const std::array<SimplePieceRow, 20> rows = [] {
    auto s = [](std::initializer_list<int> idx) {
      Support out;
      for (int i : idx) out.insert(A(i));
      return out;
    };
    return std::array<SimplePieceRow, 20>{{
        {1, s({1, 2, 3, 4, 5, 6}), "(2n+2)!/2^(n+1)"},
        {2, s({3}), "1"},
        {3, s({6}), "1"},
        {4, s({1, 2, 3}), "(2n+1)!!"},
        {5, s({4, 5, 6}), "(2n+1)!!"},
        {6, s({2, 3, 4}), "(2n+1)!!"},
        {7, s({1, 5, 6}), "(2n+1)!!"},
        {8, s({1, 2, 3, 4, 5}), "secant S(n+1)"},
        {9, s({1, 2, 4, 5, 6}), "secant S(n+1)"},
        {10, s({1, 2, 4, 5}), "lattice L(n+1)"},
        {11, s({1, 2}), "(2n)!!"},
        {12, s({4, 5}), "(2n)!!"},
        {13, s({1, 5}), "(2n)!!"},
        {14, s({2, 4}), "(2n)!!"},
        {15, s({4}), "1"},
        {16, s({1}), "1"},
        {17, s({2, 3}), "catalan(n+1)"},
        {18, s({5, 6}), "catalan(n+1)"},
        {19, s({2}), "catalan(n)"},
        {20, s({5}), "catalan(n)"},
    }};
  }();
  return rows;
}

const SimplePieceRow& simple_piece_row(int x) {
  if (x < 1 || x > 20) throw std::out_of_range("simple piece number must be 1..20");
  return simple_piece_rows()[x - 1];
}

BigInt simple_piece_count(int x, int n) {
  simple_piece_row(x);
  check_n(n, 1);
  switch (x) {
    case 1: return multinomial_all_pairs(n + 1);
    case 2: case 3: case 15: case 16: return 1;
    case 4: case 5: case 6: case 7: return df(2 * n + 1);
    case 8: case 9: return secant(n + 1);
    case 10: return lattice_L(n + 1);
    case 11: case 12: case 13: case 14: return df(2 * n);
    case 17: case 18: return catalan(n + 1);
    default: return catalan(n);
  }
}

// ---------------------------------------------------------------------------
// Published forms. Each returns the value as printed, possibly non-integral.

namespace {

R p42(int i, long n) {
  if (i <= 3) return q(4, 3) * df(2 * n + 1);
  if (i <= 5) return pow2(n) * factorial(n + 1);
  return (n + 3) * df(2 * n + 1) - df(2 * n + 2);
}

R p43(int i, long n) {
  if (i <= 3) return q(3, 2) * df(2 * n);
  if (i <= 5) return (2 * n + 2) * df(2 * n - 1) - q(1, 2) * df(2 * n);
  return (2 * n * n + 8 * n + 1) * df(2 * n - 2) - (4 * n + 4) * df(2 * n - 1);
}

R p44(Base base, int i, long n) {
  if (base == Base::P) {
    if (i <= 2) return C(2 * n, 2) * df(2 * n - 3) + df(2 * n + 1);
    if (i == 3) return df(2 * n + 1) + df(2 * n - 1);
    return C(2 * n + 1, 3) * df(2 * n - 3) + df(2 * n + 1);
  }
  switch (i) {
    case 1: return C(2 * n - 1, 2) * df(2 * n - 4) + df(2 * n);
    case 2: return 2 * df(2 * n) - C(2 * n - 1, 2) * df(2 * n - 4);
    case 3: return df(2 * n) + df(2 * n - 2);
    case 4: return (C(2 * n + 1, 3) - 1) * df(2 * n - 4) + df(2 * n);
    case 5: return q(4 * n * n - 7 * n + 3, 3) * df(2 * n - 4) + df(2 * n);
    default: return C(2 * n, 3) * df(2 * n - 4) + df(2 * n);
  }
}

R p46(int i, long n) {
  switch (i) {
    case 1: return q(3, n + 3) * C(2 * n + 2, n);
    case 2: return q(7 * n + 2, n * n + 2 * n) * C(2 * n, n + 1);
    case 3: return Cs(n) + Cs(n - 1);
    case 4: return C(2 * n + 1, n);
    case 5: return q(8 * n * (2 * n + 1), (n + 2) * (n + 3)) * C(2 * n - 1, n) + q(1, n + 2) * C(2 * n + 2, n + 1);
    default: return q(3 * C(2 * n - 1, n) * C(2 * n + 2, 3), (n + 2) * (n + 3)) + q(C(2 * n + 2, n + 1), n + 2);
  }
}

R p47(int i, long n) {
  switch (i) {
    case 1: return q(1, n + 2) * C(2 * n + 2, n + 1);
    case 2: return q(2, n + 1) * C(2 * n, n);
    case 3: return Cs(n - 1) + Cs(n - 2);
    case 4: return 2 * C(2 * n - 2, n - 1);
    case 5: return q(2 * n * n + 4, (n + 1) * (n + 2)) * C(2 * n, n);
    default: return q(n * n - n + 4, 4 * n - 2) * C(2 * n + 1, n - 1);
  }
}

BigInt p48(int i, long n) {
  BigInt sum = 0;
  for (long k = 1; k <= 2 * n - 2; ++k) {
    BigInt w;
    if (i == 1 || i == 5 || i == 6) {
      w = C(k + 3, 3);
    } else if (i == 2 || i == 4) {
      w = (2 * n - 1 - k) * C(k + 2, 2);
    } else {
      w = (k + 1) * C(2 * n - k, 2);
    }
    sum += w * entringer(2 * n - 2, k);
  }
  return sum + secant(n + 1);
}

// Sum forms; `upper` is the last k of the T(n-1, .) sums.
R s42(int i, long n, long upper) {
  R sum = 0;
  for (long k = 1; k <= upper; ++k) {
    const BigInt t = triangle_T(n - 1, k);
    if (i == 6) {
      sum += C(2 * n - k + 1, 2) * t;
    } else {
      sum += q(1, 2) * (2 * n - k) * (k + 1) * t;
    }
  }
  return sum + df(2 * n + 1);
}

R s43(int i, long n) {
  R sum = 0;
  for (long k = 1; k <= n - 1; ++k) {
    const BigInt t = triangle_T(n - 2, k);
    if (i <= 3) {
      sum += C(k + 3, 3) * t;
    } else if (i <= 5) {
      sum += C(k + 2, 2) * (2 * n - k - 1) * t;
    } else {
      sum += C(2 * n - k, 2) * (k + 1) * t;
    }
  }
  return sum + df(2 * n);
}

R s46(int i, long n) {
  R sum = 0;
  if (i <= 2) {
    for (long k = 1; k <= n - 1; ++k) {
      sum += (i == 1 ? C(n - k + 3, 3) : C(n - k + 2, 2)) * catalan_triangle_t(n - 2, k - 1);
    }
    return sum + Cs(n);
  }
  for (long k = 1; k <= n; ++k) {
    const BigInt t = catalan_triangle_t(n - 1, k - 1);
    if (i == 4) sum += (n + k - 1) * t;
    if (i == 5) sum += (n + k - 1) * (n - k + 2) * t;
    if (i == 6) sum += C(n + k, 2) * t;
  }
  if (i == 5) return sum - C(2 * n + 1, n) + 2 * Cs(n);
  return sum + Cs(n);
}

R s47(int i, long n) {
  R sum = 0;
  for (long k = 1; k <= n - 1; ++k) {
    const BigInt t = catalan_triangle_t(n - 2, k - 1);
    switch (i) {
      case 1: sum += C(n - k + 2, 2) * t; break;
      case 2: sum += (n - k + 2) * t; break;
      case 4: sum += (n + k - 1) * t; break;
      case 5: sum += (n + k - 1) * (n - k + 1) * t; break;
      default: sum += C(n + k, 2) * t; break;
    }
  }
  return sum + Cs(n - 1);
}

}  // namespace

BigInt thm42(int i, int n) {
  check_index(i);
  check_n(n, 1);
  return to_integer(p42(i, n));
}

BigInt thm43(int i, int n) {
  check_index(i);
  check_n(n, 1);
  return to_integer(p43(i, n));
}

BigInt thm44(Base base, int i, int n) {
  check_index(i);
  check_n(n, 1);
  if (base == Base::Q && i == 5) {
    // The published coefficient (4n^2-7n+3)/3 does not match the counts.
    const long m = n;
    return to_integer(q((4 * m * m + 4 * m - 3) * (m - 1), 3) * df(2 * m - 4) + df(2 * m));
  }
  return to_integer(p44(base, i, n));
}

BigInt thm46(int i, int n) {
  check_index(i);
  check_n(n, 1);
  if (i == 5) {
    // The published closed form counts {A2,A3,B4,B5}; remove the B4-only puzzles.
    return to_integer(p46(5, n)) - C(2L * n + 1, n) + Cs(n);
  }
  return to_integer(p46(i, n));
}

BigInt thm47(int i, int n) {
  check_index(i);
  check_n(n, 1);
  return to_integer(p47(i, n));
}

BigInt thm48(int i, int n) {
  check_index(i);
  check_n(n, 2);
  return p48(i, n);
}

BigInt thm42_sum(int i, int n) {
  if (i < 4 || i > 6) throw std::out_of_range("sum form exists for i = 4..6");
  check_n(n, 1);
  return to_integer(s42(i, n, n));
}

BigInt even_double_factorial_sum(int n) {
  check_n(n, 1);
  BigInt sum = 0;
  for (long k = 1; k <= n; ++k) sum += (k + 1) * triangle_T(n - 1, k);
  return sum;
}

Support base_support(Base base) {
  return base == Base::P ? Support::of({A(1), A(2), A(3)}) : Support::of({A(1), A(2)});
}

// ---------------------------------------------------------------------------

namespace {

std::string idx(int i) { return std::to_string(i); }

FormulaClaim claim(std::string id, std::string group, FormKind kind, std::string statement, Support s, int min_n,
                   std::function<Rational(int)> printed, std::function<BigInt(int)> engine) {
  return FormulaClaim{std::move(id), std::move(group), kind, std::move(statement), s, min_n, std::move(printed), std::move(engine)};
}

std::vector<FormulaClaim> build_claims() {
  std::vector<FormulaClaim> out;
  const Support P = base_support(Base::P), Q = base_support(Base::Q);
  const Support A23 = Support::of({A(2), A(3)}), A2 = Support::of({A(2)});
  const Support A12345 = Support::of({A(1), A(2), A(3), A(4), A(5)});

  const char* f42[] = {"4/3 (2n+1)!!", "4/3 (2n+1)!!", "4/3 (2n+1)!!", "2^n (n+1)!", "2^n (n+1)!", "(n+3)(2n+1)!! - (2n+2)!!"};
  const char* f43[] = {"3/2 (2n)!!", "3/2 (2n)!!", "3/2 (2n)!!", "(2n+2)(2n-1)!! - 1/2 (2n)!!", "(2n+2)(2n-1)!! - 1/2 (2n)!!",
                       "(2n^2+8n+1)(2n-2)!! - (4n+4)(2n-1)!!"};
  const char* f44p[] = {"binom(2n,2)(2n-3)!! + (2n+1)!!", "binom(2n,2)(2n-3)!! + (2n+1)!!", "(2n+1)!! + (2n-1)!!",
                        "binom(2n+1,3)(2n-3)!! + (2n+1)!!", "binom(2n+1,3)(2n-3)!! + (2n+1)!!", "binom(2n+1,3)(2n-3)!! + (2n+1)!!"};
  const char* f44q[] = {"binom(2n-1,2)(2n-4)!! + (2n)!!", "2(2n)!! - binom(2n-1,2)(2n-4)!!", "(2n)!! + (2n-2)!!",
                        "(binom(2n+1,3)-1)(2n-4)!! + (2n)!!", "(4n^2-7n+3)/3 (2n-4)!! + (2n)!!", "binom(2n,3)(2n-4)!! + (2n)!!"};
  const char* f46[] = {"3/(n+3) binom(2n+2,n)", "(7n+2)/(n^2+2n) binom(2n,n+1)", "C(n) + C(n-1)", "binom(2n+1,n)",
                       "8n(2n+1)/((n+2)(n+3)) binom(2n-1,n) + 1/(n+2) binom(2n+2,n+1)",
                       "3 binom(2n-1,n) binom(2n+2,3)/((n+2)(n+3)) + binom(2n+2,n+1)/(n+2)"};
  const char* f47[] = {"1/(n+2) binom(2n+2,n+1)", "2/(n+1) binom(2n,n)", "C(n-1) + C(n-2)", "2 binom(2n-2,n-1)",
                       "(2n^2+4)/((n+1)(n+2)) binom(2n,n)", "(n^2-n+4)/(4n-2) binom(2n+1,n-1)"};
  const char* f48[] = {"sum binom(i+3,3) E(2n-2,i) + S(n+1)", "sum (2n-1-i) binom(i+2,2) E(2n-2,i) + S(n+1)",
                       "sum (i+1) binom(2n-i,2) E(2n-2,i) + S(n+1)"};

  for (int i = 1; i <= 6; ++i) {
    const std::string b = "B" + idx(i), c = "C" + idx(i);
    out.push_back(claim("thm42." + b, "thm42", FormKind::Closed, std::string("s_n({A1,A2,A3} u ") + b + ") = " + f42[i - 1],
                        P | Support::of({B(i)}), 1, [i](int n) { return p42(i, n); }, [i](int n) { return thm42(i, n); }));
    out.push_back(claim("thm43." + b, "thm43", FormKind::Closed, std::string("s_n({A1,A2} u ") + b + ") = " + f43[i - 1],
                        Q | Support::of({B(i)}), 1, [i](int n) { return p43(i, n); }, [i](int n) { return thm43(i, n); }));
  }
  for (int i = 1; i <= 6; ++i) {
    const std::string c = "C" + idx(i);
    out.push_back(claim("thm44.P." + c, "thm44", FormKind::Closed, std::string("s_n({A1,A2,A3} u ") + c + ") = " + f44p[i - 1],
                        P | Support::of({Cp(i)}), 1, [i](int n) { return p44(Base::P, i, n); },
                        [i](int n) { return thm44(Base::P, i, n); }));
  }
  for (int i = 1; i <= 6; ++i) {
    const std::string c = "C" + idx(i);
    out.push_back(claim("thm44.Q." + c, "thm44", FormKind::Closed, std::string("s_n({A1,A2} u ") + c + ") = " + f44q[i - 1],
                        Q | Support::of({Cp(i)}), i == 3 ? 1 : 2, [i](int n) { return p44(Base::Q, i, n); },
                        [i](int n) { return thm44(Base::Q, i, n); }));
  }
  for (int i = 1; i <= 6; ++i) {
    const std::string b = "B" + idx(i);
    out.push_back(claim("thm46." + b, "thm46", FormKind::Closed, std::string("s_n({A2,A3} u ") + b + ") = " + f46[i - 1],
                        A23 | Support::of({B(i)}), 1, [i](int n) { return p46(i, n); }, [i](int n) { return thm46(i, n); }));
  }
  for (int i = 1; i <= 6; ++i) {
    const std::string b = "B" + idx(i);
    out.push_back(claim("thm47." + b, "thm47", FormKind::Closed, std::string("s_n({A2} u ") + b + ") = " + f47[i - 1],
                        A2 | Support::of({B(i)}), 1, [i](int n) { return p47(i, n); }, [i](int n) { return thm47(i, n); }));
  }
  for (int i = 1; i <= 6; ++i) {
    const std::string b = "B" + idx(i);
    const int form = (i == 1 || i == 5 || i == 6) ? 0 : (i == 3 ? 2 : 1);
    out.push_back(claim("thm48." + b, "thm48", FormKind::Closed, std::string("s_n({A1..A5} u ") + b + ") = " + f48[form],
                        A12345 | Support::of({B(i)}), 2, [i](int n) { return R(p48(i, n)); },
                        [i](int n) { return thm48(i, n); }));
  }

  // Sum forms.
  out.push_back(claim("sum.AB", "sum", FormKind::Sum, "s_n({A1,A2}) = sum_{k=1}^{n} (k+1) T(n-1,k)", Q, 1,
                      [](int n) { return R(even_double_factorial_sum(n)); }, [](int n) { return df(2L * n); }));
  for (int i : {4, 5, 6}) {
    const std::string b = "B" + idx(i);
    const char* body = i == 6 ? "sum_{k=1}^{n-1} binom(2n-k+1,2) T(n-1,k) + (2n+1)!!"
                              : "1/2 sum_{k=1}^{n-1} (2n-k)(k+1) T(n-1,k) + (2n+1)!!";
    out.push_back(claim("sum.thm42." + b, "sum", FormKind::Sum, std::string("s_n({A1,A2,A3} u ") + b + ") = " + body,
                        P | Support::of({B(i)}), 1, [i](int n) { return s42(i, n, n - 1); }, [i](int n) { return thm42(i, n); }));
  }
  for (int i = 1; i <= 6; ++i) {
    const std::string b = "B" + idx(i);
    const char* body = i <= 3 ? "sum_{k=1}^{n-1} binom(k+3,3) T(n-2,k) + (2n)!!"
                       : i <= 5 ? "sum_{k=1}^{n-1} binom(k+2,2)(2n-k-1) T(n-2,k) + (2n)!!"
                                : "sum_{k=1}^{n-1} binom(2n-k,2)(k+1) T(n-2,k) + (2n)!!";
    out.push_back(claim("sum.thm43." + b, "sum", FormKind::Sum, std::string("s_n({A1,A2} u ") + b + ") = " + body,
                        Q | Support::of({B(i)}), 2, [i](int n) { return s43(i, n); }, [i](int n) { return thm43(i, n); }));
  }
  for (int i : {1, 2, 4, 5, 6}) {
    const std::string b = "B" + idx(i);
    const char* body = i == 1   ? "sum_{k=1}^{n-1} binom(n-k+3,3) t(n-2,k-1) + C(n)"
                       : i == 2 ? "sum_{k=1}^{n-1} binom(n-k+2,2) t(n-2,k-1) + C(n)"
                       : i == 4 ? "sum_{k=1}^{n} (n+k-1) t(n-1,k-1) + C(n)"
                       : i == 5 ? "sum_{k=1}^{n} (n+k-1)(n-k+2) t(n-1,k-1) - binom(2n+1,n) + 2C(n)"
                                : "sum_{k=1}^{n} binom(n+k,2) t(n-1,k-1) + C(n)";
    out.push_back(claim("sum.thm46." + b, "sum", FormKind::Sum, std::string("s_n({A2,A3} u ") + b + ") = " + body,
                        A23 | Support::of({B(i)}), i <= 2 ? 2 : 1, [i](int n) { return s46(i, n); },
                        [i](int n) { return thm46(i, n); }));
  }
  for (int i : {1, 2, 4, 5, 6}) {
    const std::string b = "B" + idx(i);
    const char* body = i == 1   ? "sum_{k=1}^{n-1} binom(n-k+2,2) t(n-2,k-1) + C(n-1)"
                       : i == 2 ? "sum_{k=1}^{n-1} (n-k+2) t(n-2,k-1) + C(n-1)"
                       : i == 4 ? "sum_{k=1}^{n-1} (n+k-1) t(n-2,k-1) + C(n-1)"
                       : i == 5 ? "sum_{k=1}^{n-1} (n+k-1)(n-k+1) t(n-2,k-1) + C(n-1)"
                                : "sum_{k=1}^{n-1} binom(n+k,2) t(n-2,k-1) + C(n-1)";
    out.push_back(claim("sum.thm47." + b, "sum", FormKind::Sum, std::string("s_n({A2} u ") + b + ") = " + body,
                        A2 | Support::of({B(i)}), 2, [i](int n) { return s47(i, n); }, [i](int n) { return thm47(i, n); }));
  }

  // Sum-vs-closed simplifications, as printed (upper bound n-1).
  out.push_back(claim("ident.thm42.B45", "ident", FormKind::Identity,
                      "1/2 sum_{k=1}^{n-1} (2n-k)(k+1) T(n-1,k) + (2n+1)!! = 2^n (n+1)!", Support{}, 1,
                      [](int n) { return s42(4, n, n - 1); }, [](int n) { return to_integer(p42(4, n)); }));
  out.push_back(claim("ident.thm42.B6", "ident", FormKind::Identity,
                      "sum_{k=1}^{n-1} binom(2n-k+1,2) T(n-1,k) + (2n+1)!! = (n+3)(2n+1)!! - (2n+2)!!", Support{}, 1,
                      [](int n) { return s42(6, n, n - 1); }, [](int n) { return to_integer(p42(6, n)); }));
  return out;
}

}  // namespace

const std::vector<FormulaClaim>& formula_claims() {
  static const std::vector<FormulaClaim> claims = build_claims();
  return claims;
}

const FormulaClaim& formula_claim(const std::string& id) {
  for (const auto& c : formula_claims()) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("unknown formula claim '" + id + "'");
}

// ---------------------------------------------------------------------------

Support family_support(ConverterFamily f) {
  switch (f) {
    case ConverterFamily::A2A3: return Support::of({A(2), A(3)});
    case ConverterFamily::A2: return Support::of({A(2)});
    default: return Support::of({A(1), A(2), A(3), A(4), A(5)});
  }
}

int converter_image(ConverterFamily f, int i) {
  check_index(i);
  const Support fam = family_support(f);
  const Support image = f1(f2(f3(fam | Support::of({Cp(i)}))));
  for (int j = 1; j <= 6; ++j) {
    if (image == (fam | Support::of({B(j)}))) return j;
  }
  throw std::logic_error("F1 o F2 o F3 does not preserve the family for C" + std::to_string(i));
}

// ---------------------------------------------------------------------------

namespace {

void check_corner(int i, int j, int m) {
  if (m < 1 || i < 1 || j < 1 || i + j > 2 * m) throw std::out_of_range("P_x needs m >= 1, i, j >= 1 and i + j <= 2m");
}

bool unit(int i, int j, int m) { return m == 1 && i == 1 && j == 1; }

BigInt printed_row(int x, long i, long j, long m) {
  const long s = i + j;
  switch (x) {
    case 1: return multinomial_all_pairs(m - 1);
    case 2: return (i == 2 * m - 1 && j == 1) ? 1 : 0;
    case 3: return (i == 1 && j == 1) ? 1 : 0;
    case 4: return (m <= i && i <= 2 * m - 1) ? to_integer(q(factorial(i - 1), df(2 * i - 2 * m))) : BigInt(0);
    case 5:
      if (i != 1) return 0;
      return m == 1 ? BigInt(1) : df(2 * m - 3);
    case 6:
      if (m == 1) return unit(i, j, m) ? 1 : 0;
      return s == 2 * m ? df(2 * m - 3) : BigInt(0);
    case 7: return (2 <= s && s <= m + 1) ? to_integer(q(factorial(2 * m - s), df(2 * m - 2 * s + 2))) : BigInt(0);
    case 8: return entringer(2 * m - 2, s - 2);
    case 9: return (2 <= i && i <= 2 * m) ? entringer(2 * m - 2, 2 * m - i) : BigInt(0);
    case 11:
      if (m == 1) return unit(i, j, m) ? 1 : 0;
      return (m <= i && i <= 2 * m - 2) ? to_integer(q((2 * m - 1 - i) * factorial(i - 2), df(2 * i - 2 * m))) : BigInt(0);
    case 12:
      if (m == 1) return unit(i, j, m) ? 1 : 0;
      return (i == 1 && j >= 3) ? df(2 * m - 4) : BigInt(0);
    case 13:
      if (m == 1) return (i == 1 && j == 2) ? 1 : 0;
      return (3 <= s && s <= m + 1) ? to_integer(q((s - 2) * factorial(2 * m - 1 - s), df(2 * m + 2 - 2 * s))) : BigInt(0);
    case 14:
      if (m == 1) return unit(i, j, m) ? 1 : 0;
      return (s == 2 * m && i <= 2 * m - 2) ? df(2 * m - 4) : BigInt(0);
    case 15: return (i == 1 && j == 2 * m - 1) ? 1 : 0;
    case 16: return (i == m && j == 1) ? 1 : 0;
    case 17: return (m <= i && i <= 2 * m - 1 && s == 2 * m) ? to_integer(q(2 * m - i, m) * C(i - 1, m - 1)) : BigInt(0);
    case 18: return (i == 1 && j <= m) ? to_integer(q(s - 1, m) * C(2 * m - s, m - 1)) : BigInt(0);
    case 19:
      if (m == 1) return unit(i, j, m) ? 1 : 0;
      return (s == 2 * m && m <= i && i <= 2 * m - 2) ? to_integer(q(2 * m - i - 1, m - 1) * C(i - 2, m - 2)) : BigInt(0);
    case 20:
      if (m == 1) return unit(i, j, m) ? 1 : 0;
      return (i == 1 && 2 <= j && j <= m) ? to_integer(q(s - 2, m - 1) * C(2 * m - s - 1, m - 2)) : BigInt(0);
    default: throw std::logic_error("unreachable refinement row");
  }
}

void check_row(int x) {
  if (x < 1 || x > 20) throw std::out_of_range("simple piece number must be 1..20");
  if (x == kUnsolvedRow) throw std::invalid_argument("refinement unknown");
}

}  // namespace

BigInt table3_as_printed(int x, int i, int j, int m) {
  check_row(x);
  check_corner(i, j, m);
  return printed_row(x, i, j, m);
}

BigInt Px(int x, int i, int j, int m) {
  check_row(x);
  check_corner(i, j, m);
  if (x == 9) return i <= 2 * m - 1 ? entringer(2L * m - 2, 2L * m - 1 - i) : BigInt(0);
  if (x == 12 && m > 1) return (i == 1 && j >= 2) ? df(2L * m - 4) : BigInt(0);
  if (x == 13 && m == 1) return unit(i, j, m) ? 1 : 0;
  return printed_row(x, i, j, m);
}

// ---------------------------------------------------------------------------

namespace {

void check_q(int i, int j, int k, int l, int m, int p) {
  if (i < 1 || j < 1 || k < 1 || l < 1 || m < 1 || p < 1 || i + j > 2 * m || k + l > 2 * p) {
    throw std::domain_error("Q needs positive arguments with i+j <= 2m and k+l <= 2p");
  }
}

}  // namespace

BigInt Q1(int i, int j, int k, int l, int m, int p) {
  check_q(i, j, k, l, m, p);
  BigInt sum = 0;
  for (long a = 0; a < k; ++a) {
    for (long b = 0; b < j; ++b) {
      sum += C(i + a - 1, a) * C(b + k + l - a - 1, b) * C(2L * m - i - b + 2L * p - k - l, 2L * p - k - l);
    }
  }
  return sum;
}

BigInt Q2(int i, int j, int k, int l, int m, int p) {
  check_q(i, j, k, l, m, p);
  BigInt sum = 0;
  for (long a = 0; a < k; ++a) {
    for (long b = 0; b < j; ++b) {
      const BigInt head = C(i + a - 1, a) * C(b + k - a - 1, b);
      if (head == 0) continue;
      for (long c = 0; c < l; ++c) {
        sum += head * C(c + j - b - 1, c) * C(2L * m + 2L * p - k - c - i - j, 2L * m - i - j);
      }
    }
  }
  return sum;
}

BigInt Q3(int i, int j, int k, int l, int m, int p) {
  check_q(i, j, k, l, m, p);
  BigInt sum = 0;
  for (long a = 0; a < k; ++a) sum += C(i + j + a - 1, a) * C(2L * m + 2L * p - i - j - a, 2L * p - a);
  return sum;
}

BigInt Ty(int y, int i, int j, int k, int l, int m, int p) {
  switch (y) {
    case 1: return Q1(i, j, k, l, m, p);
    case 2: return Q2(i, j, k, l, m, p);
    case 3: return Q3(i, j, k, l, m, p);
    case 4: return Q1(k, l, i, j, p, m);
    case 5: return Q2(k, l, i, j, p, m);
    case 6: return Q3(k, l, i, j, p, m);
    default: throw std::out_of_range("converter index must be 1..6");
  }
}

Support assembled_support(int x, int y, int z, ConverterKind kind) {
  check_index(y);
  const Support P = simple_piece_row(x).support;
  const Support Qs = simple_piece_row(z).support;
  if (kind == ConverterKind::B) return P | Support::of({B(y)}) | f1(f2(Qs));
  return f2(P) | Support::of({Cp(y)}) | f1(Qs);
}

BigInt compose(int x, int y, int z, int n, ConverterKind) {
  check_row(x);
  check_row(z);
  check_index(y);
  check_n(n, 1);
  // corner[m] holds the nonzero (i, j, P(i,j,m)) for each piece.
  auto corners = [](int row, int m) {
    std::vector<std::tuple<int, int, BigInt>> out;
    for (int i = 1; i < 2 * m; ++i) {
      for (int j = 1; i + j <= 2 * m; ++j) {
        BigInt v = Px(row, i, j, m);
        if (v != 0) out.emplace_back(i, j, std::move(v));
      }
    }
    return out;
  };
  BigInt sum = 0;
  for (int m = 1; m <= n; ++m) {
    const int p = n + 1 - m;
    const auto left = corners(x, m);
    const auto right = corners(z, p);
    for (const auto& [i, j, a] : left) {
      for (const auto& [k, l, b] : right) sum += a * Ty(y, i, j, k, l, m, p) * b;
    }
  }
  return sum + simple_piece_count(x, n) + simple_piece_count(z, n);
}

// ---------------------------------------------------------------------------

IndexSet parse_index_set(std::string_view text) {
  IndexSet s = 0;
  for (char ch : text) {
    if (ch >= '1' && ch <= '6') {
      s |= static_cast<IndexSet>(1u << (ch - '1'));
    } else if (ch != ',' && ch != ' ' && ch != '{' && ch != '}') {
      throw std::invalid_argument("index sets hold digits 1..6");
    }
  }
  return s;
}

namespace {

Support indexed(PieceClass c, IndexSet alpha) {
  Support s;
  for (int i = 1; i <= 6; ++i) {
    if (alpha >> (i - 1) & 1u) s.insert(piece_id(c, i));
  }
  return s;
}

IdentityCheck two_choice(IndexSet alpha, PieceClass p0, PieceClass p1, IndexSet pick_p, PieceClass q0, PieceClass q1,
                         IndexSet pick_q, int n) {
  check_n(n, 1);
  const IndexSet a = alpha & 0x3f;
  const Support mixed = indexed(p0, a & ~pick_p) | indexed(p1, a & pick_p) | indexed(q0, a & ~pick_q) | indexed(q1, a & pick_q);
  const Support base = indexed(PieceClass::A, a);
  return {mixed.empty() ? BigInt(0) : count_dp(mixed, n), base.empty() ? BigInt(0) : 2 * count_dp(base, n)};
}

}  // namespace

IdentityCheck thm51_check(IndexSet alpha, IndexSet use_b, IndexSet use_d, int n) {
  return two_choice(alpha, PieceClass::A, PieceClass::B, use_b, PieceClass::C, PieceClass::D, use_d, n);
}

IdentityCheck corollary52_check(IndexSet alpha, IndexSet use_c, IndexSet use_d, int n) {
  return two_choice(alpha, PieceClass::A, PieceClass::C, use_c, PieceClass::B, PieceClass::D, use_d, n);
}

Support knuth_support() { return Support::of({A(1), A(4), B(3), B(6), Cp(3), Cp(6), D(1), D(4)}); }

IdentityCheck thm_P_eq_AP(std::uint8_t classes, IndexSet alpha, int n) {
  check_n(n, 1);
  Support p_alpha, p_one;
  for (int c = 0; c < 4; ++c) {
    if (!(classes >> c & 1u)) continue;
    p_alpha = p_alpha | indexed(static_cast<PieceClass>(c), alpha & 0x3f);
    p_one.insert(piece_id(static_cast<PieceClass>(c), 1));
  }
  const Support a_alpha = indexed(PieceClass::A, alpha & 0x3f);
  const BigInt lhs = p_alpha.empty() ? BigInt(0) : count_dp(p_alpha, n);
  const BigInt a = a_alpha.empty() ? BigInt(0) : count_dp(a_alpha, n);
  const BigInt one = p_one.empty() ? BigInt(0) : count_dp(p_one, n);
  return {lhs, a * one};
}

BigInt fibonacci_family(int n) {
  check_n(n, 1);
  return fibonacci(n + 3);
}

BigInt fibonacci_family_alt(int n) {
  check_n(n, 1);
  return fibonacci(n + 2);
}

BigInt linear_family(int n) {
  check_n(n, 1);
  return n + 2;
}

}  // namespace stdpuzzle
