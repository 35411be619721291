#include "lt/syntax.hpp"

namespace lt {

namespace {

// Binary operands that are themselves binary are always parenthesised, so
// associativity and the no-mixing rule never need to be consulted.
bool is_binary(const Formula &f) {
    return f.children().size() == 2;
}

std::string operand(const Formula &f) {
    std::string s = to_string(f);
    return is_binary(f) ? "(" + s + ")" : s;
}

std::string binary_symbol(const Formula &f) {
    switch (f.kind()) {
    case connective::ext_or: return "|";
    case connective::ext_and: return "&";
    case connective::int_or: return "i|";
    case connective::int_and: return "i&";
    case connective::derived:
        return f.tag() == derived_tag::implies ? "->" : "o*";
    default: return "?";
    }
}

std::string label_operand(const Label &a) {
    std::string s = to_string(a);
    return a.children().size() == 2 ? "(" + s + ")" : s;
}

} // namespace

std::string to_string(const Formula &f) {
    switch (f.kind()) {
    case connective::ext_bot: return "bot";
    case connective::int_bot: return "ibot";
    case connective::var: return "P" + std::to_string(f.index());
    case connective::ext_not: return "!" + operand(f.child(0));
    case connective::int_not: return "i!" + operand(f.child(0));
    case connective::derived:
        switch (f.tag()) {
        case derived_tag::ext_top: return "top";
        case derived_tag::int_top: return "itop";
        case derived_tag::nb: return "nb";
        case derived_tag::strict_not: return "~" + operand(f.child(0));
        case derived_tag::down: return "down " + operand(f.child(0));
        case derived_tag::up: return "up " + operand(f.child(0));
        case derived_tag::diamond: return "dia " + operand(f.child(0));
        case derived_tag::box: return "box " + operand(f.child(0));
        case derived_tag::implies:
        case derived_tag::circle_star:
            break;
        }
        [[fallthrough]];
    default:
        return operand(f.child(0)) + " " + binary_symbol(f) + " " + operand(f.child(1));
    }
}

std::string to_string(const Label &a) {
    switch (a.kind()) {
    case label_kind::bot: return "F";
    case label_kind::atom: return "p" + std::to_string(a.index());
    case label_kind::neg: return "!" + label_operand(a.child(0));
    case label_kind::lor: return label_operand(a.child(0)) + " | " + label_operand(a.child(1));
    case label_kind::land: return label_operand(a.child(0)) + " & " + label_operand(a.child(1));
    }
    return "?";
}

std::string to_string(const LabelledFormula &lf) { return to_string(lf.label) + " : " + to_string(lf.formula); }

} // namespace lt
