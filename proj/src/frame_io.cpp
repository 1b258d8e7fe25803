#include "nlogic/frame_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace nlogic {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

struct TripleEntry {
  std::string out, a1, a2;
};

TripleEntry parse_triple(const std::string& w, const std::string& key) {
  auto open = w.find('(');
  auto bar = w.find('|');
  auto comma = w.find(',');
  auto close = w.find(')');
  if (open != 0 || bar == std::string::npos || comma == std::string::npos ||
      close == std::string::npos || !(open < bar && bar < comma && comma < close))
    throw FrameError("ParseError", "bad " + key + " entry '" + w + "' (want (out|a,b))");
  return {w.substr(1, bar - 1), w.substr(bar + 1, comma - bar - 1),
          w.substr(comma + 1, close - comma - 1)};
}

std::pair<std::string, std::string> parse_pair(const std::string& w, const std::string& key) {
  auto open = w.find('(');
  auto comma = w.find(',');
  auto close = w.find(')');
  if (open != 0 || comma == std::string::npos || close == std::string::npos ||
      !(open < comma && comma < close))
    throw FrameError("ParseError", "bad " + key + " entry '" + w + "' (want (a,b))");
  return {w.substr(1, comma - 1), w.substr(comma + 1, close - comma - 1)};
}

}  // namespace

SortedFrame parse_frame_text(const std::string& text) {
  SortedFrame f;
  std::vector<std::pair<std::string, std::string>> ipairs;
  std::vector<TripleEntry> ts, rs, ss;
  std::vector<std::string> uwords;
  bool saw_u = false, saw_t = false, saw_r = false, saw_s = false;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (split_ws(line).empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw FrameError("ParseError", "line " + std::to_string(lineno) + ": missing ':'");
    std::string key = line.substr(0, colon);
    key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
    auto words = split_ws(line.substr(colon + 1));
    if (key == "sort1") {
      f.names1.insert(f.names1.end(), words.begin(), words.end());
    } else if (key == "sortD" || key == "sort∂" || key == "sortd") {
      f.namesD.insert(f.namesD.end(), words.begin(), words.end());
    } else if (key == "I") {
      for (auto& w : words) ipairs.push_back(parse_pair(w, "I"));
    } else if (key == "U") {
      saw_u = true;
      uwords.insert(uwords.end(), words.begin(), words.end());
    } else if (key == "T") {
      saw_t = true;
      for (auto& w : words) ts.push_back(parse_triple(w, "T"));
    } else if (key == "R") {
      saw_r = true;
      for (auto& w : words) rs.push_back(parse_triple(w, "R"));
    } else if (key == "S") {
      saw_s = true;
      for (auto& w : words) ss.push_back(parse_triple(w, "S"));
    } else if (key == "class") {
      if (!words.empty()) f.class_tag = words[0];
    } else {
      throw FrameError("ParseError", "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  f.n1 = static_cast<int>(f.names1.size());
  f.nD = static_cast<int>(f.namesD.size());
  if (f.n1 == 0 || f.nD == 0) throw FrameError("ParseError", "both sorts must be declared");
  std::map<std::string, int> idx1, idxD;
  for (int i = 0; i < f.n1; ++i) {
    if (idx1.count(f.names1[i])) throw FrameError("ParseError", "duplicate sort-1 point");
    idx1[f.names1[i]] = i;
  }
  for (int i = 0; i < f.nD; ++i) {
    if (idxD.count(f.namesD[i])) throw FrameError("ParseError", "duplicate sort-∂ point");
    idxD[f.namesD[i]] = i;
  }
  auto look = [](const std::map<std::string, int>& m, const std::string& nm, const char* sort) {
    auto it = m.find(nm);
    if (it == m.end())
      throw FrameError("ParseError", "unknown sort-" + std::string(sort) + " point '" + nm + "'");
    return it->second;
  };
  f.irow.assign(f.n1, 0);
  for (auto& [x, y] : ipairs) f.irow[look(idx1, x, "1")] |= bit(look(idxD, y, "∂"));
  if (saw_u) {
    f.has_u = true;
    if (uwords.size() == 1 && uwords[0] == "all") {
      f.u = mask(f.n1);
    } else {
      for (auto& w : uwords) f.u |= bit(look(idx1, w, "1"));
    }
  }
  if (saw_t) {
    f.has_t = true;
    f.t_sec.assign(f.n1, std::vector<Bits>(f.nD, 0));
    for (auto& e : ts)
      f.t_sec[look(idx1, e.a1, "1")][look(idxD, e.a2, "∂")] |= bit(look(idxD, e.out, "∂"));
  }
  if (saw_r) {
    f.has_r = true;
    f.r_sec.assign(f.n1, std::vector<Bits>(f.n1, 0));
    for (auto& e : rs)
      f.r_sec[look(idx1, e.a1, "1")][look(idx1, e.a2, "1")] |= bit(look(idx1, e.out, "1"));
  }
  if (saw_s) {
    f.has_s = true;
    f.s_sec.assign(f.nD, std::vector<Bits>(f.n1, 0));
    for (auto& e : ss)
      f.s_sec[look(idxD, e.a1, "∂")][look(idx1, e.a2, "1")] |= bit(look(idxD, e.out, "∂"));
  }
  f.finish();
  return f;
}

SortedFrame load_frame_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FrameError("IOError", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_frame_text(ss.str());
}

std::string frame_to_text(const SortedFrame& f) {
  std::ostringstream os;
  os << "sort1:";
  for (auto& n : f.names1) os << " " << n;
  os << "\nsortD:";
  for (auto& n : f.namesD) os << " " << n;
  os << "\nI:";
  for (int x = 0; x < f.n1; ++x)
    for (int y : members(f.irow[x])) os << " (" << f.names1[x] << "," << f.namesD[y] << ")";
  os << "\n";
  if (f.has_u) {
    os << "U:";
    if (f.u == mask(f.n1)) {
      os << " all";
    } else {
      for (int x : members(f.u)) os << " " << f.names1[x];
    }
    os << "\n";
  }
  if (f.has_t) {
    os << "T:";
    for (int x = 0; x < f.n1; ++x)
      for (int v = 0; v < f.nD; ++v)
        for (int y : members(f.t_sec[x][v]))
          os << " (" << f.namesD[y] << "|" << f.names1[x] << "," << f.namesD[v] << ")";
    os << "\n";
  }
  if (f.has_r) {
    os << "R:";
    for (int x = 0; x < f.n1; ++x)
      for (int z = 0; z < f.n1; ++z)
        for (int u : members(f.r_sec[x][z]))
          os << " (" << f.names1[u] << "|" << f.names1[x] << "," << f.names1[z] << ")";
    os << "\n";
  }
  if (f.has_s) {
    os << "S:";
    for (int v = 0; v < f.nD; ++v)
      for (int x = 0; x < f.n1; ++x)
        for (int y : members(f.s_sec[v][x]))
          os << " (" << f.namesD[y] << "|" << f.namesD[v] << "," << f.names1[x] << ")";
    os << "\n";
  }
  if (!f.class_tag.empty()) os << "class: " << f.class_tag << "\n";
  return os.str();
}

}  // namespace nlogic
