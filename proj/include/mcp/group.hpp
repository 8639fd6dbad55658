#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcp {

struct InvalidSpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GroupElement {
    std::vector<int> residues;
    auto operator<=>(const GroupElement&) const = default;
};

// Direct sum of cyclic groups Z_{d1} + ... + Z_{dk}. Elements are addressed by
// their colexicographic index (first residue fastest); index 0 is the zero
// element and G+ position p holds index p+1.
class GroupSpec {
public:
    GroupSpec() = default;
    explicit GroupSpec(std::vector<int> orders);

    const std::vector<int>& orders() const { return orders_; }
    int order() const { return order_; }
    int nonzero_count() const { return order_ - 1; }

    int index(const GroupElement& e) const;
    GroupElement element(int index) const;

    int add(int a, int b) const { return add_[a * order_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int scalar_mul(long long n, int a) const;
    int element_order(int a) const;

    // "4x2"
    std::string name() const;
    // "(1,0)" for non-cyclic groups, "1" for cyclic ones
    std::string label(int index) const;
    // "1,0"
    std::string argument(int index) const;

    bool operator==(const GroupSpec& o) const { return orders_ == o.orders_; }

private:
    void check(int index) const;

    std::vector<int> orders_;
    int order_ = 0;
    std::vector<int> add_;
    std::vector<int> neg_;
};

GroupSpec make_group(const std::vector<int>& orders);
GroupSpec parse_group(const std::string& text);
GroupElement parse_element(const GroupSpec& spec, const std::string& text);

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupSpec& spec, const GroupElement& a);
GroupElement scalar_mul(const GroupSpec& spec, long long n, const GroupElement& a);
std::vector<GroupElement> elements_nonzero(const GroupSpec& spec);

// Bijective endomorphism stored as the image of every element index.
class Automorphism {
public:
    Automorphism() = default;
    explicit Automorphism(std::vector<int> image) : image_(std::move(image)) {}
    static Automorphism identity(const GroupSpec& spec);

    int operator()(int index) const { return image_[index]; }
    const std::vector<int>& image() const { return image_; }
    std::size_t size() const { return image_.size(); }

    Automorphism inverse() const;
    // x -> next(this(x)); so that t.(phi then sigma) = (t.phi).sigma
    Automorphism then(const Automorphism& next) const;
    bool is_identity() const;
    bool is_automorphism_of(const GroupSpec& spec) const;

    auto operator<=>(const Automorphism&) const = default;

private:
    std::vector<int> image_;
};

enum class AutScope { componentwise, full };

std::string scope_name(AutScope s);
AutScope parse_scope(const std::string& text);

std::vector<Automorphism> enumerate_automorphisms(const GroupSpec& spec);
// Coordinatewise unit scalings (u1 r1, ..., uk rk) with gcd(ui, di) = 1.
std::vector<Automorphism> componentwise_automorphisms(const GroupSpec& spec);
std::vector<Automorphism> automorphisms(const GroupSpec& spec, AutScope scope);

std::vector<Automorphism> stabilizer(const std::vector<Automorphism>& group, int g0);
std::vector<Automorphism> stabilizer(const GroupSpec& spec, const GroupElement& g0,
                                     AutScope scope = AutScope::full);

// Point with coordinates over G+; result r satisfies r(phi(g)) = t(g).
std::vector<int> act_on_point(const Automorphism& phi, const std::vector<int>& t);

}  // namespace mcp
