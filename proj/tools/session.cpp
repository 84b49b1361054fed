#include "session.hpp"

#include "diffract/io.hpp"

namespace diffract::cli {

int exit_code_for(Errc code) {
  switch (code) {
  case Errc::NotAGroup:
    return kNotAGroup;
  case Errc::RequiresTransversal:
    return kRequiresTransversal;
  case Errc::UnknownLawId:
    return kUnknownLaw;
  case Errc::UnknownElement:
    return kUnknownElement;
  default:
    return kParse;
  }
}

Session::Session(const GroupSource &source, SessionConfig config)
    : config_(config) {
  int given = !source.builtin.empty() + !source.table_file.empty() + !source.gens_file.empty();
  if (given != 1)
    throw Error(Errc::ParseError, "give exactly one of --builtin, --table, --gens");
  if (!source.builtin.empty()) {
    group_ = std::make_shared<const FiniteGroup>(builtin_from_spec(source.builtin));
    name_ = source.builtin;
  } else if (!source.table_file.empty()) {
    group_ = std::make_shared<const FiniteGroup>(io::parse_gtab(io::read_file(source.table_file)));
    name_ = source.table_file;
  } else {
    group_ = std::make_shared<const FiniteGroup>(
        io::parse_gens(io::read_file(source.gens_file), config_.max_order));
    name_ = source.gens_file;
  }
  if (group_->order() > config_.max_order)
    throw Error(Errc::GroupTooLarge, "group order " + std::to_string(group_->order()) +
                                         " exceeds the cap " +
                                         std::to_string(config_.max_order));
}

Element Session::resolve(const std::string &text) const {
  auto found = group_->find(text);
  if (!found)
    throw Error(Errc::UnknownElement, "unknown element '" + text + "'");
  return *found;
}

void Session::set_subgroup(const std::string &gens) {
  std::vector<Element> elements;
  std::string_view rest = gens;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    elements.push_back(resolve(std::string(rest.substr(0, comma))));
    if (comma == std::string_view::npos)
      break;
    rest = rest.substr(comma + 1);
  }
  subgroup_.emplace(Subgroup::generate(group_, elements));
  cosets_.reset();
  transversal_.reset();
  fibration_.reset();
}

void Session::set_strategy(const std::string &strategy, bool allow_non_transversal) {
  strategy_ = TransversalStrategy::parse(strategy);
  allow_non_transversal_ = allow_non_transversal;
  transversal_.reset();
  fibration_.reset();
}

const Subgroup &Session::subgroup() const {
  if (!subgroup_)
    throw Error(Errc::ParseError, "this command needs a subgroup (--subgroup-gens)");
  return *subgroup_;
}

const CosetDecomposition &Session::cosets() {
  if (!cosets_)
    cosets_.emplace(subgroup());
  return *cosets_;
}

const Transversal &Session::transversal() {
  if (!transversal_)
    transversal_.emplace(choose(cosets(), strategy_, allow_non_transversal_));
  return *transversal_;
}

const Fibration &Session::fibration() {
  if (!fibration_)
    fibration_.emplace(transversal());
  return *fibration_;
}

} // namespace diffract::cli
