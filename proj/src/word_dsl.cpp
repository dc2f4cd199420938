#include "dtc/word_dsl.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "dtc/error.hpp"

namespace dtc {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    out.push_back({text.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

std::optional<int> parse_index(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

Generator parse_token(const Token& tok) {
  const std::string_view s = tok.text;
  auto bad = [&]() -> Generator { throw ParseError("unknown token '" + std::string(s) + "'", tok.column); };

  if (s.size() >= 3 && s[0] == 'T' && (s[1] == '+' || s[1] == '-')) {
    const auto id = parse_index(s.substr(2));
    if (!id) return bad();
    return Twist{CurveId(*id), s[1] == '+' ? 1 : -1};
  }
  if (s.size() >= 4 && s[0] == 'M' && (s[1] == '1' || s[1] == '2') && s[2] == '@') {
    std::string_view rest = s.substr(3);
    Move mv;
    mv.kind = s[1] == '1' ? MoveKind::First : MoveKind::Second;
    if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
      if (mv.kind == MoveKind::First) return bad();
      const auto bottom = parse_index(rest.substr(colon + 1));
      if (!bottom) return bad();
      mv.bottom = *bottom;
      rest = rest.substr(0, colon);
    }
    const auto id = parse_index(rest);
    if (!id) return bad();
    mv.curve = CurveId(*id);
    return mv;
  }
  return bad();
}

CurveId generator_curve(const Generator& g) {
  return std::visit([](const auto& x) { return x.curve; }, g);
}

}  // namespace

MappingWord parse_word(std::string_view text, std::shared_ptr<const PantsDecomposition> base) {
  if (!base) throw ValidationError("word has no base decomposition");
  MappingWord w{base, {}};
  PantsDecomposition state = *base;
  for (const Token& tok : tokenize(text)) {
    Generator g = parse_token(tok);
    const CurveId curve = generator_curve(g);
    if (!state.has_curve(curve)) {
      throw ParseError("unknown curve id " + std::to_string(curve.value), tok.column);
    }
    try {
      if (const auto* tw = std::get_if<Twist>(&g)) {
        if (!state.is_interior(tw->curve)) {
          throw ValidationError("cannot twist along boundary curve " + std::to_string(curve.value));
        }
      } else {
        state = state.after_move(resolve_site(state, std::get<Move>(g)));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), tok.column);
    }
    w.generators.push_back(g);
  }
  return w;
}

std::string format_generator(const Generator& g) {
  if (const auto* tw = std::get_if<Twist>(&g)) {
    return std::string(tw->sign > 0 ? "T+" : "T-") + std::to_string(tw->curve.value);
  }
  const Move& mv = std::get<Move>(g);
  std::string s = std::string(mv.kind == MoveKind::First ? "M1@" : "M2@") + std::to_string(mv.curve.value);
  if (mv.kind == MoveKind::Second && mv.bottom) s += ":" + std::to_string(*mv.bottom);
  return s;
}

std::string format_word(const MappingWord& w) {
  std::string out;
  for (const Generator& g : w.generators) {
    if (!out.empty()) out += ' ';
    out += format_generator(g);
  }
  return out;
}

nlohmann::json word_to_json(const MappingWord& w) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Generator& g : w.generators) arr.push_back(format_generator(g));
  return arr;
}

MappingWord word_from_json(const nlohmann::json& doc, std::shared_ptr<const PantsDecomposition> base) {
  if (doc.is_string()) return parse_word(doc.get<std::string>(), std::move(base));
  if (!doc.is_array()) throw ValidationError("word must be a string or an array of tokens");
  // Rebuild a token string so column numbers refer to the joined form.
  std::string joined;
  for (const auto& tok : doc) {
    if (!tok.is_string()) throw ValidationError("word tokens must be strings");
    const std::string s = tok.get<std::string>();
    if (s.empty() || s.find_first_of(" \t\r\n") != std::string::npos) {
      throw ValidationError("malformed word token '" + s + "'");
    }
    if (!joined.empty()) joined += ' ';
    joined += s;
  }
  return parse_word(joined, std::move(base));
}

}  // namespace dtc
