#include "lt/syntax.hpp"

#include <algorithm>

namespace lt {

Label Label::make(label_kind kind, atom_index index, std::vector<Label> children) {
    return Label(std::make_shared<const node>(node{kind, index, std::move(children)}));
}

Label Label::bot() {
    static const Label a = make(label_kind::bot, 0, {});
    return a;
}

Label Label::atom(atom_index index) { return make(label_kind::atom, index, {}); }
Label Label::neg(Label a) { return make(label_kind::neg, 0, {std::move(a)}); }
Label Label::lor(Label l, Label r) { return make(label_kind::lor, 0, {std::move(l), std::move(r)}); }
Label Label::land(Label l, Label r) { return make(label_kind::land, 0, {std::move(l), std::move(r)}); }

Label Label::iff(const Label &a, const Label &b) { return land(lor(a, neg(b)), lor(neg(a), b)); }

bool operator==(const Label &a, const Label &b) noexcept {
    if (a.node_ == b.node_)
        return true;
    if (a.kind() != b.kind())
        return false;
    if (a.kind() == label_kind::atom)
        return a.index() == b.index();
    return std::ranges::equal(a.children(), b.children());
}

LabelledFormula label_equality(const Label &a, const Label &b) {
    return {Label::iff(a, b), Formula::int_not(Formula::int_bot())};
}

namespace {
void collect_atoms(const Label &a, std::set<atom_index> &out) {
    if (a.kind() == label_kind::atom)
        out.insert(a.index());
    for (const auto &c : a.children())
        collect_atoms(c, out);
}
} // namespace

std::set<atom_index> label_atoms(const Label &a) {
    std::set<atom_index> out;
    collect_atoms(a, out);
    return out;
}

} // namespace lt
