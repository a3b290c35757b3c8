#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "stdpuzzle/bigint.hpp"
#include "stdpuzzle/pieces.hpp"

namespace stdpuzzle {

// ---------------------------------------------------------------------------
// The twenty 1-simple pieces, numbered 1..20.

struct SimplePieceRow {
  int x;
  Support support;
  std::string sequence;  // name of s_n
};

inline constexpr int kUnsolvedRow = 10;  // {A1,A2,A4,A5}: no corner refinement known

const std::array<SimplePieceRow, 20>& simple_piece_rows();
const SimplePieceRow& simple_piece_row(int x);  // throws std::out_of_range
// Closed form of s_n for row x.
BigInt simple_piece_count(int x, int n);

// ---------------------------------------------------------------------------
// Closed forms for a simple piece plus one converter. The Catalan notation
// C(k) in the {A2,A3} and {A2} families is s_k({A2,A3}) = catalan(k+1).

BigInt thm42(int i, int n);  // {A1,A2,A3} u B_i
BigInt thm43(int i, int n);  // {A1,A2} u B_i

enum class Base { P, Q };  // P = {A1,A2,A3}, Q = {A1,A2}
// {A1,A2,A3} u C_i, {A1,A2} u C_i. Forms with (2n-4)!! need n >= 2.
BigInt thm44(Base base, int i, int n);

BigInt thm46(int i, int n);  // {A2,A3} u B_i
BigInt thm47(int i, int n);  // {A2} u B_i
BigInt thm48(int i, int n);  // {A1..A5} u B_i, n >= 2

Support base_support(Base base);

// Sum forms behind thm42 (i = 4..6), summed over k = 1..n.
BigInt thm42_sum(int i, int n);
// sum_{k=1}^{n} (k+1) T(n-1, k), which equals s_n({A1,A2}) = (2n)!!.
BigInt even_double_factorial_sum(int n);

// Published statement vs engine value for one formula.
enum class FormKind { Closed, Sum, Identity };

struct FormulaClaim {
  std::string id;         // "thm44.Q.C5"
  std::string group;      // "thm44"
  FormKind kind;
  std::string statement;  // the formula as published
  Support support;        // empty for pure identities
  int min_n;
  std::function<Rational(int)> printed;
  std::function<BigInt(int)> engine;  // what the library returns (count for identities)
};

// Every closed form, sum form and sum identity of the converter families.
const std::vector<FormulaClaim>& formula_claims();
const FormulaClaim& formula_claim(const std::string& id);  // throws std::out_of_range

// ---------------------------------------------------------------------------
// F1 o F2 o F3 sends family u C_i to family u B_j.

enum class ConverterFamily { A2A3, A2, A1toA5 };
Support family_support(ConverterFamily f);
// Returns j; throws std::logic_error if the image is not family u B_j.
int converter_image(ConverterFamily f, int i);

// ---------------------------------------------------------------------------
// Corner-refined counts P_x(i, j, m): puzzles of the x-th simple piece with m
// columns whose right column holds i (bottom) and i + j (top).
// Throws std::invalid_argument("refinement unknown") for x = 10 and
// std::out_of_range unless 1 <= i, 1 <= j, i + j <= 2m.

BigInt Px(int x, int i, int j, int m);
// The refinement table exactly as published; rows 9, 12 and 13 differ from Px.
BigInt table3_as_printed(int x, int i, int j, int m);

// Partitions of {1..2m+2p} into A (2m elements) and B (2p elements) with
//   Q1: a_i < b_k < b_{k+l} < a_{i+j}
//   Q2: a_i < b_k < a_{i+j} < b_{k+l}
//   Q3: a_i < a_{i+j} < b_k < b_{k+l}
// Throws std::domain_error unless all arguments are positive, i+j <= 2m, k+l <= 2p.
BigInt Q1(int i, int j, int k, int l, int m, int p);
BigInt Q2(int i, int j, int k, int l, int m, int p);
BigInt Q3(int i, int j, int k, int l, int m, int p);
// Q_y for y <= 3, Q_{y-3}(k, l, i, j, p, m) for y >= 4.
BigInt Ty(int y, int i, int j, int k, int l, int m, int p);

enum class ConverterKind { B, C };

// B: P u B_y u F1F2(Q).  C: F2(P) u C_y u F1(Q).
Support assembled_support(int x, int y, int z, ConverterKind kind);
// Triple sum of P_x T_y P_z over m + p = n + 1 plus s_n(P) + s_n(Q).
// Both kinds share the sum. Throws std::invalid_argument for x or z = 10.
BigInt compose(int x, int y, int z, int n, ConverterKind kind = ConverterKind::B);

// ---------------------------------------------------------------------------
// Identities between families. Index sets use bit (i-1) for index i.

using IndexSet = std::uint8_t;
IndexSet parse_index_set(std::string_view text);  // "1,3,4"

struct IdentityCheck {
  BigInt lhs;
  BigInt rhs;
  bool holds() const { return lhs == rhs; }
};

// P_i = B_i where `use_b` has bit (i-1), else A_i; Q_i = D_i where `use_d`
// has it, else C_i. lhs = s_n(u P_i u Q_i), rhs = 2 s_n(u A_i).
IdentityCheck thm51_check(IndexSet alpha, IndexSet use_b, IndexSet use_d, int n);
// P_i in {A_i, C_i} (bit in use_c picks C), Q_i in {B_i, D_i} (bit in use_d picks D).
IdentityCheck corollary52_check(IndexSet alpha, IndexSet use_c, IndexSet use_d, int n);

Support knuth_support();  // {A1,A4,B3,B6,C3,C6,D1,D4}

// Classes as bits 0..3 for A..D. Returns (s_n(P_alpha), s_n(A_alpha) s_n(P_1)).
IdentityCheck thm_P_eq_AP(std::uint8_t classes, IndexSet alpha, int n);

BigInt fibonacci_family(int n);  // s_n({A1,B1,C1}) = F(n+3)
// Alternative published values for the three-piece index-1 families.
BigInt fibonacci_family_alt(int n);  // F(n+2), claimed for {A1,B1,C1} and {B1,C1,D1}
BigInt linear_family(int n);         // n + 2, claimed for {A1,B1,D1} and {A1,C1,D1}

}  // namespace stdpuzzle
