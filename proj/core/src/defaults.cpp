#include "beldef/defaults.hpp"

#include <fstream>
#include <sstream>

#include "beldef/errors.hpp"
#include "beldef/parser.hpp"

namespace beldef {

Formula material(const DefaultRule& rule) {
  return Formula::disj(Formula::negate(rule.antecedent), rule.consequent);
}

int DefaultBase::add(Formula antecedent, Formula consequent) {
  const int id = static_cast<int>(rules_.size()) + 1;
  rules_.push_back({id, std::move(antecedent), std::move(consequent)});
  return id;
}

const DefaultRule& DefaultBase::rule(int id) const {
  return rules_.at(static_cast<std::size_t>(id - 1));
}

std::string rule_to_string(const Vocabulary& vocab, const DefaultRule& rule) {
  return rule.antecedent.to_string(vocab) + " ~> " + rule.consequent.to_string(vocab);
}

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  if (auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

KnowledgeBase parse_kb(const std::string& text, std::size_t capacity) {
  KnowledgeBase kb{Vocabulary(capacity), DefaultBase()};
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  bool saw_rule = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    if (line.rfind("atoms:", 0) == 0) {
      if (saw_rule) throw ParseError("atoms header after first rule", 0, line_no);
      std::istringstream atoms(line.substr(6));
      std::string name;
      while (atoms >> name) kb.vocab.intern(name);
      continue;
    }
    const auto arrow = line.find("~>");
    if (arrow == std::string::npos) {
      throw ParseError("rule line without '~>'", 0, line_no);
    }
    if (line.find("~>", arrow + 2) != std::string::npos) {
      throw ParseError("more than one '~>' on a rule line", 0, line_no);
    }
    try {
      Formula antecedent = parse_formula(line.substr(0, arrow), kb.vocab);
      Formula consequent = parse_formula(line.substr(arrow + 2), kb.vocab);
      kb.base.add(std::move(antecedent), std::move(consequent));
    } catch (const ParseError& e) {
      throw ParseError(std::string(e.what()), e.position, line_no);
    }
    saw_rule = true;
  }
  return kb;
}

KnowledgeBase load_kb(const std::string& path, std::size_t capacity) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open knowledge base: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_kb(buffer.str(), capacity);
}

}  // namespace beldef
