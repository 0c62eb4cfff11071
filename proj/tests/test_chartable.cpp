#include "doctest.h"
#include "helpers.hpp"

#include <set>

using namespace modcat;
using namespace testing;

namespace {

// rows of a table as a set of (element -> value) strings for comparison
std::set<std::string> row_set(const CharacterTable& t) {
    std::set<std::string> out;
    for (const auto& row : t.rows) {
        std::string key;
        for (const auto& c : t.classes)
            key += t.X->name(c.representative) + "=" + row.at(c.representative).to_string() + ";";
        out.insert(key);
    }
    return out;
}

std::set<std::string> golden_rows(const FiniteGroup& X, const CharacterTable& t, const Json& rows) {
    std::set<std::string> out;
    for (const auto& row : rows) {
        std::string key;
        for (const auto& c : t.classes) {
            const std::string n = X.name(c.representative);
            Cyclotomic v = Cyclotomic::parse(row.at(n).get<std::string>(), 6);
            key += n + "=" + v.to_string() + ";";
        }
        out.insert(key);
    }
    return out;
}

}  // namespace

TEST_CASE("golden character tables of the dihedral fixtures") {
    FiniteGroup X = d6();
    Json golden = Json::parse(read_file(data_dir() + "/golden/d6_char_tables.json"));
    for (const auto& [name, spec] : golden.items()) {
        Subgroup H(X, parse_element_list(X, spec.at("subgroup").get<std::string>()));
        CharacterTable t = character_table(X, H);
        CHECK(t.rows.size() == spec.at("rows").size());
        CHECK(row_set(t) == golden_rows(X, t, spec.at("rows")));
    }
}

TEST_CASE("c6 rows are powers of w") {
    FiniteGroup X = c6();
    CharacterTable t = character_table(X);
    REQUIRE(t.rows.size() == 6);
    // every row is chi_r(a^k) = w^{rk} for some r
    int a = 1;  // generator discovered second
    std::set<long> rs;
    for (const auto& row : t.rows) {
        Cyclotomic va = row.at(a);
        long order = va.root_order();
        CHECK(order != 0);
        // find r with va = w^r
        for (long r = 0; r < 6; ++r)
            if (va == Cyclotomic::root_of_unity(6, r)) {
                rs.insert(r);
                for (int k = 0; k < 6; ++k) {
                    int ak = 0;
                    for (int i = 0; i < k; ++i) ak = X.mul(ak, a);
                    CHECK(row.at(ak) == Cyclotomic::root_of_unity(6, r * k));
                }
            }
    }
    CHECK(rs.size() == 6);
}

TEST_CASE("trivial subgroup") {
    FiniteGroup X = d6();
    CharacterTable t = character_table(X, Subgroup(X, {0}));
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].at(0) == Cyclotomic(1));
    CHECK(t.degrees == std::vector<int>{1});
}

TEST_CASE("burnside-dixon on assorted small groups") {
    for (auto make : {s3, d4, q8, c6, z3}) {
        FiniteGroup X = make();
        CharacterTable t = character_table(X);
        CHECK(t.rows.size() == conjugacy_classes(X).size());
        long long sumd2 = 0;
        for (int d : t.degrees) sumd2 += static_cast<long long>(d) * d;
        CHECK(sumd2 == X.order());
    }
    // q8 degrees: 1,1,1,1,2
    CharacterTable q = character_table(q8());
    CHECK(q.degrees == std::vector<int>{1, 1, 1, 1, 2});
    CHECK_THROWS_AS(character_table(d6(), 5), GroupTooLarge);
}

TEST_CASE("transport") {
    FiniteGroup X = d6();
    CharacterTable c6t = character_table(X, Subgroup(X, names_to_ids(X, {"e", "a", "a2", "a3", "a4", "a5"})));
    int b = X.index_of("b");
    for (const auto& row : c6t.rows) {
        // case 3: chi_{V_{a4}}(v) = chi_{V_{a2}}(b v b)
        ClassFunction moved = transport_character(row, b, row.elems);
        for (int v : row.elems) CHECK(moved.at(v) == row.at(X.mul(X.mul(b, v), X.inv(b))));
        // u = e is the identity transport
        CHECK(transport_character(row, 0, row.elems) == row);
        // transport by u then u^-1 returns the original
        CHECK(transport_character(moved, X.inv(b), row.elems) == row);
        CHECK(moved.degree() == row.degree());
    }
    // case 5: chi_{V_{ba2}}(v) = chi_{V_b}(a4 v a2), conjugator a4
    CharacterTable v4 = character_table(X, Subgroup(X, names_to_ids(X, {"e", "a3", "b", "ba3"})));
    int a4 = X.index_of("a4");
    std::vector<int> stab_ba2 = names_to_ids(X, {"e", "a3", "ba2", "ba5"});
    for (const auto& row : v4.rows) {
        ClassFunction moved = transport_character(row, a4, stab_ba2);
        for (int v : stab_ba2) CHECK(moved.at(v) == row.at(X.mul(X.mul(a4, v), X.index_of("a2"))));
    }
    // mismatched target subgroup
    CHECK_THROWS_AS(transport_character(v4.rows[0], X.index_of("a"), names_to_ids(X, {"e", "a"})),
                    ElementDoesNotConnect);
}

TEST_CASE("dual characters") {
    FiniteGroup X = d6();
    // C6: dual of chi_r is chi_{6-r}
    CharacterTable t = character_table(X, Subgroup(X, names_to_ids(X, {"e", "a", "a2", "a3", "a4", "a5"})));
    int a = X.index_of("a");
    for (const auto& row : t.rows) {
        ClassFunction d = dual_character(row);
        CHECK(d.at(a) == row.at(X.inv(a)));
        CHECK(dual_character(d) == row);
        bool found = false;
        for (const auto& other : t.rows) found = found || other == d;
        CHECK(found);  // dual permutes the rows
    }
    // all rows of table 1 are self-dual
    CharacterTable full = character_table(X);
    for (const auto& row : full.rows) CHECK(dual_character(row) == row);
    // trivial character is self-dual
    CHECK(dual_character(full.rows[0]) == full.rows[0]);
}

TEST_CASE("orthogonality is exact for every computed table") {
    for (auto make : {s3, d4, q8}) {
        FiniteGroup X = make();
        CharacterTable t = character_table(X);
        for (size_t i = 0; i < t.rows.size(); ++i)
            for (size_t j = 0; j < t.rows.size(); ++j)
                CHECK(inner_product(t.rows[i], t.rows[j]) == Cyclotomic(i == j ? 1 : 0));
        // column orthogonality: sum over rows chi(g) conj(chi(h)) = |C(g)| delta
        for (const auto& cg : t.classes)
            for (const auto& ch : t.classes) {
                Cyclotomic acc;
                for (const auto& row : t.rows)
                    acc += row.at(cg.representative) * row.at(ch.representative).conjugate();
                if (cg.representative == ch.representative)
                    CHECK(acc == Cyclotomic(static_cast<long>(X.order() / cg.members.size())));
                else
                    CHECK(acc.is_zero());
            }
    }
}
