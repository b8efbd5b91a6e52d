#ifndef FANOCERT_CATALOG_HPP
#define FANOCERT_CATALOG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fanocert/polynomial.hpp"
#include "fanocert/sections.hpp"

namespace fanocert {

// Variable universes used by the suites. Each suite builds a fresh registry
// for the worlds it touches.
enum class World {
    lines_pair,  // P^1 x P^1 with coordinates ([x1:y1], [x2:y2])
    hirzebruch,  // F_3, its group, P^5 and curve parameters
    quadric,     // P^4, quadric family parameter c, torus
    line,        // P^1 for the family parameter
};

[[nodiscard]] RegistryPtr make_registry(World w);
[[nodiscard]] std::string_view to_string(World w);

struct CatalogEntry {
    std::string name;
    World world;
    std::string text;
    std::string note;
};

// Table of every explicit polynomial the suites certify, stored as text so
// that a perturbed copy can be handed to the suites unchanged.
class Catalog {
public:
    static Catalog standard();

    [[nodiscard]] const std::vector<CatalogEntry>& entries() const { return entries_; }
    [[nodiscard]] const CatalogEntry& entry(std::string_view name) const;
    [[nodiscard]] Polynomial get(std::string_view name, const RegistryPtr& reg) const;
    [[nodiscard]] std::vector<Polynomial> get_all(const std::vector<std::string>& names,
                                                  const RegistryPtr& reg) const;

    void set_text(std::string_view name, std::string text);

private:
    std::vector<CatalogEntry> entries_;
};

// Bidegree gradings.
[[nodiscard]] Grading lines_pair_grading(const RegistryPtr& reg);   // x1,y1 ~ (1,0); x2,y2 ~ (0,1)
[[nodiscard]] Grading hirzebruch_grading(const RegistryPtr& reg);   // x ~ (1,0), y0 ~ (-3,1), y1 ~ (0,1)

// Copy of the catalog with one entry perturbed by r * m for a random
// nonzero rational r and a random monomial m in that entry's world.
struct Mutation {
    Catalog catalog;
    std::string entry;
    std::string added;
};
[[nodiscard]] Mutation mutate(const Catalog& base, std::uint64_t seed);

}  // namespace fanocert

#endif  // FANOCERT_CATALOG_HPP
