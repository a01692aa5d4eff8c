#include "godp/resolve.hpp"

#include <algorithm>
#include <functional>

namespace godp {

const Item* ResolvedLibrary::find(std::string_view name) const {
  auto it = index.find(name);
  return it == index.end() ? nullptr : &library.items[it->second];
}

namespace {

struct Edge {
  std::size_t from, to;
  SourceLoc loc;
};

std::vector<std::vector<std::size_t>> strongly_connected(
    const std::vector<std::vector<std::size_t>>& graph) {
  // Tarjan's algorithm.
  const std::size_t n = graph.size();
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  int counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    order[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w : graph[v]) {
      if (order[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], order[w]);
      }
    }
    if (low[v] == order[v]) {
      std::vector<std::size_t> component;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != v);
      std::sort(component.begin(), component.end());
      components.push_back(std::move(component));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (order[v] < 0) visit(v);
  }
  return components;
}

std::vector<std::vector<std::size_t>> cyclic_components(
    const std::vector<std::vector<std::size_t>>& graph) {
  std::vector<std::vector<std::size_t>> out;
  for (auto& component : strongly_connected(graph)) {
    std::size_t v = component.front();
    bool self_loop = std::find(graph[v].begin(), graph[v].end(), v) != graph[v].end();
    if (component.size() > 1 || self_loop) out.push_back(std::move(component));
  }
  std::sort(out.begin(), out.end());
  return out;
}

class Resolver {
 public:
  explicit Resolver(const Library& library) { out_.library = library; }

  ResolvedLibrary run() {
    const auto& items = out_.library.items;
    for (std::size_t i = 0; i < items.size(); ++i) out_.index.emplace(items[i].name(), i);
    out_.dependencies.resize(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) {
      current_ = i;
      bind(items[i].body());
    }

    // Forward references on a cycle are reported as the cycle instead.
    std::vector<int> component_of(items.size(), -1);
    auto cycles = cyclic_components(out_.dependencies);
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      for (std::size_t v : cycles[c]) component_of[v] = static_cast<int>(c);
    }
    for (const auto& edge : forward_) {
      bool on_cycle = component_of[edge.from] >= 0 && component_of[edge.from] == component_of[edge.to];
      if (!on_cycle) {
        throw Error(ErrorKind::ForwardReference,
                    "'" + items[edge.to].name() + "' is referenced before its definition",
                    edge.loc);
      }
    }

    for (const auto& item : items) {
      if (!item.is_pattern) declared_of(item);
    }
    for (const auto& item : items) {
      if (item.is_pattern) out_.free_symbols[item.name()] = free_symbols(item.pattern);
    }
    return std::move(out_);
  }

 private:
  const Item& lookup(const std::string& name, SourceLoc loc) {
    const Item* item = out_.find(name);
    if (!item) throw Error(ErrorKind::UnresolvedReference, "unknown name '" + name + "'", loc);
    std::size_t target = out_.index.at(name);
    auto& deps = out_.dependencies[current_];
    if (std::find(deps.begin(), deps.end(), target) == deps.end()) deps.push_back(target);
    if (target > current_) forward_.push_back({current_, target, loc});
    return *item;
  }

  void bind(const OntologyExpr& e) {
    using K = OntologyExpr::Kind;
    switch (e.kind) {
      case K::Basic:
        return;
      case K::Then:
      case K::And:
        for (const auto& operand : e.operands) bind(operand);
        return;
      case K::Ref: {
        const Item& item = lookup(e.target, e.loc);
        if (item.is_pattern) {
          throw Error(ErrorKind::ArityMismatch,
                      "pattern '" + e.target + "' expects " +
                          std::to_string(item.pattern.params.size()) + " arguments, got 0",
                      e.loc);
        }
        return;
      }
      case K::Instantiate: {
        const Item& item = lookup(e.target, e.loc);
        std::size_t expected = item.is_pattern ? item.pattern.params.size() : 0;
        if (expected != e.args.size()) {
          throw Error(ErrorKind::ArityMismatch,
                      (item.is_pattern ? "pattern '" : "ontology '") + e.target + "' expects " +
                          std::to_string(expected) + " arguments, got " +
                          std::to_string(e.args.size()),
                      e.loc);
        }
        for (std::size_t i = 0; i < e.args.size(); ++i) {
          const Arg& arg = e.args[i];
          const Param& param = item.pattern.params[i];
          if (arg.kind == Arg::Kind::Ontology) {
            lookup(arg.name.str(), arg.loc);
          } else if (param.is_ontology && arg.kind == Arg::Kind::Symbol && !arg.annotation &&
                     arg.name.is_plain()) {
            // A bare name in an ontology slot names an ontology; unknown
            // names are left to the instantiation check.
            const Item* target = out_.find(arg.name.str());
            if (target && !target->is_pattern) lookup(arg.name.str(), arg.loc);
          }
        }
        return;
      }
    }
  }

  const std::set<StructuredName>& declared_of(const Item& item) {
    auto it = out_.declared.find(item.name());
    if (it != out_.declared.end()) return it->second;
    auto& slot = out_.declared[item.name()];
    slot = declared_in(item.body());
    return slot;
  }

  // Declarations of basic blocks, referenced ontologies, and instantiation arguments.
  std::set<StructuredName> declared_in(const OntologyExpr& e) {
    std::set<StructuredName> out;
    using K = OntologyExpr::Kind;
    switch (e.kind) {
      case K::Basic:
        for (const auto& frame : e.frames) out.insert(frame.subject);
        break;
      case K::Then:
      case K::And:
        for (const auto& operand : e.operands) out.merge(declared_in(operand));
        break;
      case K::Ref:
        if (const Item* item = out_.find(e.target); item && !item->is_pattern) {
          auto declared = declared_of(*item);
          out.insert(declared.begin(), declared.end());
        }
        break;
      case K::Instantiate:
        for (const auto& arg : e.args) {
          if (arg.kind == Arg::Kind::Symbol) out.insert(arg.name);
          if (const Item* item = out_.find(arg.name.str()); item && !item->is_pattern) {
            auto declared = declared_of(*item);
            out.insert(declared.begin(), declared.end());
          }
          for (const auto& pair : arg.fit) out.insert(pair.to);
        }
        break;
    }
    return out;
  }

  std::vector<StructuredName> free_symbols(const PatternDef& pattern) {
    std::set<StructuredName> known = declared_in(pattern.body);
    for (const auto& param : pattern.params) {
      if (param.is_ontology) {
        for (const auto& [name, kind] : param.signature) known.insert(name);
      } else {
        known.insert(param.name);
      }
    }
    std::set<StructuredName> used;
    std::function<void(const OntologyExpr&)> walk = [&](const OntologyExpr& e) {
      if (e.kind == OntologyExpr::Kind::Basic) {
        for (const auto& ax : desugar_frames(e.frames)) {
          for (const auto& [name, kind] : typed_symbols(ax)) used.insert(name);
        }
      }
      for (const auto& operand : e.operands) walk(operand);
    };
    walk(pattern.body);
    std::vector<StructuredName> out;
    std::set_difference(used.begin(), used.end(), known.begin(), known.end(),
                        std::back_inserter(out));
    return out;
  }

  ResolvedLibrary out_;
  std::size_t current_ = 0;
  std::vector<Edge> forward_;
};

}  // namespace

ResolvedLibrary resolve(const Library& library) { return Resolver(library).run(); }

std::vector<std::vector<std::string>> detect_cycles(const ResolvedLibrary& library) {
  std::vector<std::vector<std::string>> out;
  for (const auto& component : cyclic_components(library.dependencies)) {
    std::vector<std::string> names;
    for (std::size_t v : component) names.push_back(library.library.items[v].name());
    out.push_back(std::move(names));
  }
  return out;
}

void check_acyclic(const ResolvedLibrary& library) {
  auto cycles = detect_cycles(library);
  if (cycles.empty()) return;
  const auto& first = cycles.front();
  std::string path;
  for (const auto& name : first) path += name + " -> ";
  path += first.front();
  const Item* item = library.find(first.front());
  throw Error(ErrorKind::CyclicReference, "cyclic reference: " + path,
              item ? item->loc() : SourceLoc{});
}

}  // namespace godp
