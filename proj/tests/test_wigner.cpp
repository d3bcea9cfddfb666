#include <optional>
#include <random>

#include <gtest/gtest.h>

#include "gchar/wigner.hpp"
#include "oracles.hpp"

namespace gchar {
namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }
BigRational q(long long n, long long d = 1) { return make_rational(n, d); }

TEST(TriangleOk, Examples) {
  EXPECT_TRUE(triangle_ok(h(2), h(0), h(2)));
  EXPECT_FALSE(triangle_ok(h(2), h(6), h(2)));
  EXPECT_TRUE(triangle_ok(h(1), h(2), h(1)));
  EXPECT_FALSE(triangle_ok(h(1), h(1), h(1)));  // half-integer perimeter
}

TEST(ClebschGordan, Examples) {
  for (int tj = 0; tj <= 8; ++tj) {
    for (int tm = -tj; tm <= tj; tm += 2) {
      EXPECT_EQ(clebsch_gordan(h(tj), h(tm), h(0), h(0), h(tj), h(tm)), SqrtRational(1, 1));
    }
  }
  EXPECT_EQ(clebsch_gordan(h(2), h(0), h(4), h(0), h(2), h(0)), SqrtRational(-1, q(2, 5)));
  EXPECT_EQ(clebsch_gordan(h(2), h(2), h(4), h(0), h(2), h(2)), SqrtRational(1, q(1, 10)));
}

TEST(ClebschGordan, DomainErrors) {
  EXPECT_THROW(clebsch_gordan(h(2), h(4), h(0), h(0), h(2), h(4)), DomainError);
  EXPECT_THROW(clebsch_gordan(h(2), h(1), h(0), h(0), h(2), h(1)), DomainError);
  EXPECT_THROW(clebsch_gordan(h(-2), h(0), h(0), h(0), h(2), h(0)), DomainError);
}

TEST(ClebschGordan, MatchesLadderOperatorConstruction) {
  for (int tj1 = 0; tj1 <= 7; ++tj1) {
    for (int tj2 = 0; tj2 <= 7; ++tj2) {
      const oracle::LadderCG ladder(tj1, tj2);
      for (int tJ = std::abs(tj1 - tj2); tJ <= tj1 + tj2; tJ += 2) {
        for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
          for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
            const int tM = tm1 + tm2;
            if (std::abs(tM) > tJ) continue;
            const double exact = clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2), h(tJ), h(tM)).to_double();
            EXPECT_NEAR(exact, ladder(tm1, tm2, tJ, tM), 1e-12)
                << tj1 << " " << tm1 << " " << tj2 << " " << tm2 << " | " << tJ << " " << tM;
          }
        }
      }
    }
  }
}

TEST(ClebschGordan, RankTwoDiagonalClosedForm) {
  // <j m 2 0 | j m> = [3m^2 - j(j+1)] / sqrt((2j-1) j (j+1) (2j+3)), j >= 1.
  for (int tj = 2; tj <= 16; ++tj) {
    const BigRational j = q(tj, 2), jj = j * (j + 1);
    for (int tm = -tj; tm <= tj; tm += 2) {
      const BigRational m = q(tm, 2);
      const BigRational num = 3 * m * m - jj;
      const SqrtRational expected(sign(num), num * num / ((2 * j - 1) * jj * (2 * j + 3)));
      EXPECT_EQ(clebsch_gordan(h(tj), h(tm), h(4), h(0), h(tj), h(tm)), expected) << tj << " " << tm;
    }
  }
}

TEST(ClebschGordan, SelectionRulesGiveExactZero) {
  EXPECT_TRUE(clebsch_gordan(h(2), h(2), h(2), h(0), h(2), h(0)).is_zero());  // m1+m2 != m3
  EXPECT_TRUE(clebsch_gordan(h(2), h(0), h(2), h(0), h(6), h(0)).is_zero());  // triangle
  EXPECT_TRUE(clebsch_gordan(h(2), h(0), h(2), h(0), h(2), h(0)).is_zero());  // parity zero
}

TEST(Wigner3j, Examples) {
  EXPECT_TRUE(wigner_3j({h(2), h(2), h(2), h(0), h(0), h(0)}).is_zero());
  for (int tj = 0; tj <= 8; ++tj) {
    for (int tm = -tj; tm <= tj; tm += 2) {
      const int ph = ((tj - tm) / 2) % 2 == 0 ? 1 : -1;
      EXPECT_EQ(wigner_3j({h(tj), h(0), h(tj), h(-tm), h(0), h(tm)}), SqrtRational(ph, q(1, tj + 1)));
    }
  }
  EXPECT_EQ(wigner_3j({h(2), h(4), h(2), h(-2), h(0), h(2)}), SqrtRational(1, q(1, 30)));
  EXPECT_TRUE(wigner_3j({h(2), h(2), h(2), h(2), h(2), h(0)}).is_zero());  // sum of m != 0
  EXPECT_THROW(wigner_3j({h(2), h(2), h(2), h(4), h(-4), h(0)}), DomainError);
}

TEST(Wigner3j, ColumnReversal) {
  // (1 1 1; 1 -1 0): odd perimeter, so reversal flips the sign.
  const ThreeJArgs s{h(2), h(2), h(2), h(2), h(-2), h(0)};
  const SqrtRational orig = wigner_3j(s);
  ASSERT_FALSE(orig.is_zero());
  EXPECT_EQ(wigner_3j(reversed(s)), -orig);
  EXPECT_EQ(symmetry_3j_reverse(s), -orig);

  // Brute force from Clebsch-Gordan for both sides across small arguments.
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      for (int c = 0; c <= 4; ++c) {
        for (int ma = -a; ma <= a; ma += 2) {
          for (int mb = -b; mb <= b; mb += 2) {
            const int mc = -ma - mb;
            if (std::abs(mc) > c || (c - mc) % 2 != 0) continue;
            const ThreeJArgs t{h(a), h(b), h(c), h(ma), h(mb), h(mc)};
            EXPECT_EQ(symmetry_3j_reverse(t), wigner_3j(reversed(t)));
            if ((a + b + c) % 4 == 0) {
              EXPECT_EQ(wigner_3j(reversed(t)), wigner_3j(t));
            }
          }
        }
      }
    }
  }
  EXPECT_TRUE(symmetry_3j_reverse({h(2), h(2), h(2), h(0), h(0), h(0)}).is_zero());
}

TEST(Wigner, PairedDiagonalProductsAreRational) {
  for (int tj = 1; tj <= 20; ++tj) {
    for (int k = 0; k <= tj; ++k) {
      std::vector<SqrtRational> c;
      for (int tm = -tj; tm <= tj; tm += 2) c.push_back(clebsch_gordan(h(tj), h(tm), h(2 * k), h(0), h(tj), h(tm)));
      for (const auto& a : c) {
        for (const auto& b : c) ASSERT_TRUE(try_sqrt_to_rational(sqrt_mul(a, b))) << tj << " " << k;
      }
    }
  }
}

TEST(Wigner, DiagonalOrthogonality) {
  // sum_m <j m k 0|j m><j m k' 0|j m> = delta_kk' (2j+1)/(2k+1), by brute force.
  for (int tj = 0; tj <= 12; ++tj) {
    for (int k = 0; k <= tj; ++k) {
      for (int kp = 0; kp <= tj; ++kp) {
        // Every product shares one surd; sum the rational multiples of the first nonzero term.
        std::optional<SqrtRational> unit;
        BigRational multiple = 0;
        for (int tm = -tj; tm <= tj; tm += 2) {
          const SqrtRational term =
              sqrt_mul(clebsch_gordan(h(tj), h(tm), h(2 * k), h(0), h(tj), h(tm)),
                       clebsch_gordan(h(tj), h(tm), h(2 * kp), h(0), h(tj), h(tm)));
          if (term.squared() == 0) continue;
          if (!unit) unit = term;
          multiple += sqrt_to_rational(sqrt_div(term, *unit));
        }
        if (k == kp) {
          ASSERT_TRUE(unit);
          EXPECT_EQ(multiple * sqrt_to_rational(*unit), q(tj + 1, 2 * k + 1)) << tj << " " << k;
        } else {
          EXPECT_EQ(multiple, 0) << tj << " " << k << " " << kp;
        }
      }
    }
  }
}

TEST(Wigner, CgTo3jRoundTripOnRandomArguments) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> tj_dist(0, 12);
  int tested = 0;
  while (tested < 500) {
    const int tj1 = tj_dist(rng), tj2 = tj_dist(rng), tj3 = tj_dist(rng);
    std::uniform_int_distribution<int> m1(0, tj1), m2(0, tj2);
    const int tm1 = 2 * m1(rng) - tj1, tm2 = 2 * m2(rng) - tj2, tm3 = tm1 + tm2;
    if (std::abs(tm3) > tj3 || (tj3 - tm3) % 2 != 0) continue;
    const SqrtRational cg = clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2), h(tj3), h(tm3));
    EXPECT_EQ(clebsch_gordan_from_3j(h(tj1), h(tm1), h(tj2), h(tm2), h(tj3), h(tm3)), cg);
    ++tested;
  }
}

TEST(Wigner, SelectionRulesOnRandomArguments) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> tj_dist(0, 8);
  for (int i = 0; i < 2000; ++i) {
    const int tj1 = tj_dist(rng), tj2 = tj_dist(rng), tj3 = tj_dist(rng);
    std::uniform_int_distribution<int> m1(0, tj1), m2(0, tj2), m3(0, tj3);
    const int tm1 = 2 * m1(rng) - tj1, tm2 = 2 * m2(rng) - tj2, tm3 = 2 * m3(rng) - tj3;
    const bool tri = triangle_ok(h(tj1), h(tj2), h(tj3));
    if (tm1 + tm2 != tm3 || !tri) {
      EXPECT_TRUE(clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2), h(tj3), h(tm3)).is_zero());
    }
    if (tm1 + tm2 + tm3 != 0 || !tri) {
      EXPECT_TRUE(wigner_3j({h(tj1), h(tj2), h(tj3), h(tm1), h(tm2), h(tm3)}).is_zero());
    }
  }
}

}  // namespace
}  // namespace gchar
