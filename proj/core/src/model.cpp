#include "segstab/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace segstab {

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Direction Direction::canonical(long long dx, long long dy) {
    long long g = gcd_ll(dx, dy);
    if (g != 0) {
        dx /= g;
        dy /= g;
    }
    if (dx < 0 || (dx == 0 && dy < 0)) {
        dx = -dx;
        dy = -dy;
    }
    return Direction{dx, dy};
}

bool Direction::is_canonical() const {
    if (dx == 0 && dy == 0) return false;
    if (gcd_ll(dx, dy) != 1) return false;
    return dx > 0 || (dx == 0 && dy > 0);
}

LineKey LineKey::through(long long px, long long py, Direction d) {
    // Normal of (dx,dy) is (dy,-dx); gcd stays 1 for canonical directions.
    long long a = d.dy;
    long long b = -d.dx;
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
    }
    return LineKey{d, a, b, a * px + b * py};
}

LineKey LineKey::of_segment(const SegmentRecord& s) {
    return LineKey::through(s.ax, s.ay, s.dir);
}

namespace {

using i128 = __int128;

inline i128 cross(long long ux, long long uy, long long vx, long long vy) {
    return static_cast<i128>(ux) * vy - static_cast<i128>(uy) * vx;
}

inline bool within(long long lo, long long v, long long hi) {
    return std::min(lo, hi) <= v && v <= std::max(lo, hi);
}

}  // namespace

bool incidence(const PointRecord& p, const SegmentRecord& s) {
    if (s.kind == SegmentKind::full_line) {
        return cross(s.dir.dx, s.dir.dy, p.x - s.ax, p.y - s.ay) == 0;
    }
    if (cross(s.bx - s.ax, s.by - s.ay, p.x - s.ax, p.y - s.ay) != 0) return false;
    return within(s.ax, p.x, s.bx) && within(s.ay, p.y, s.by);
}

std::vector<Violation> validate(const Instance& inst, bool allow_full_lines) {
    std::vector<Violation> out;
    auto add = [&out](std::string code, std::string msg) {
        out.push_back({std::move(code), std::move(msg)});
    };

    const int n = static_cast<int>(inst.points.size());
    std::set<std::pair<long long, long long>> coords;
    std::vector<char> seen_id(n, 0);
    for (const auto& p : inst.points) {
        if (p.id < 0 || p.id >= n) {
            add("point.id", "point id " + std::to_string(p.id) + " outside 0.." + std::to_string(n - 1));
            continue;
        }
        if (seen_id[p.id]) add("point.id", "duplicate point id " + std::to_string(p.id));
        seen_id[p.id] = 1;
        if (!coords.insert({p.x, p.y}).second)
            add("point.coords", "duplicate coordinates at point id " + std::to_string(p.id));
        if (!(p.w >= 0.0) || !std::isfinite(p.w))
            add("point.weight", "negative or non-finite weight at point id " + std::to_string(p.id));
    }

    std::set<Direction> dirset;
    for (const auto& d : inst.directions) {
        if (!d.is_canonical())
            add("direction.canonical", "direction (" + std::to_string(d.dx) + "," + std::to_string(d.dy) + ") not canonical");
        if (!dirset.insert(d).second)
            add("direction.duplicate", "direction (" + std::to_string(d.dx) + "," + std::to_string(d.dy) + ") declared twice");
    }

    const int m = static_cast<int>(inst.segments.size());
    std::vector<char> seen_sid(m, 0);
    for (const auto& s : inst.segments) {
        if (s.id < 0 || s.id >= m) {
            add("segment.id", "segment id " + std::to_string(s.id) + " outside 0.." + std::to_string(m - 1));
            continue;
        }
        if (seen_sid[s.id]) add("segment.id", "duplicate segment id " + std::to_string(s.id));
        seen_sid[s.id] = 1;
        if (!dirset.count(s.dir))
            add("segment.direction", "segment id " + std::to_string(s.id) + " uses undeclared direction");
        if (s.kind == SegmentKind::full_line) {
            if (!allow_full_lines)
                add("segment.full_line", "segment id " + std::to_string(s.id) + " is a full line (not permitted in this variant)");
        } else {
            if (s.ax == s.bx && s.ay == s.by)
                add("segment.degenerate", "segment id " + std::to_string(s.id) + " has equal endpoints");
            else if (cross(s.dir.dx, s.dir.dy, s.bx - s.ax, s.by - s.ay) != 0)
                add("segment.collinear", "segment id " + std::to_string(s.id) + " endpoints not along its direction");
        }
        bool nonempty = false;
        for (const auto& p : inst.points) {
            if (incidence(p, s)) {
                nonempty = true;
                break;
            }
        }
        if (!nonempty)
            add("segment.empty", "segment id " + std::to_string(s.id) + " contains no point");
    }

    for (size_t oi = 0; oi < inst.objects.size(); ++oi) {
        const auto& obj = inst.objects[oi];
        if (obj.empty()) add("object.empty", "object " + std::to_string(oi) + " lists no segments");
        for (int sid : obj) {
            if (sid < 0 || sid >= m)
                add("object.segment", "object " + std::to_string(oi) + " references unknown segment " + std::to_string(sid));
        }
    }
    return out;
}

std::map<LineKey, std::vector<int>> group_by_line(const Instance& inst, Direction dir) {
    std::map<LineKey, std::vector<int>> lines;
    for (const auto& p : inst.points) lines[LineKey::through(p.x, p.y, dir)].push_back(p.id);
    for (auto& [key, ids] : lines) {
        std::sort(ids.begin(), ids.end(), [&](int ia, int ib) {
            return projection(inst.points[ia], dir) < projection(inst.points[ib], dir);
        });
    }
    return lines;
}

bool hits_all(const Instance& inst, const std::vector<int>& selected) {
    return unhit_segments(inst, selected).empty();
}

std::vector<int> unhit_segments(const Instance& inst, const std::vector<int>& selected) {
    std::vector<char> in(inst.points.size(), 0);
    for (int id : selected)
        if (id >= 0 && static_cast<size_t>(id) < in.size()) in[id] = 1;
    std::vector<int> unhit;
    for (const auto& s : inst.segments) {
        bool hit = false;
        for (const auto& p : inst.points) {
            if (in[p.id] && incidence(p, s)) {
                hit = true;
                break;
            }
        }
        if (!hit) unhit.push_back(s.id);
    }
    return unhit;
}

double set_weight(const Instance& inst, const std::vector<int>& ids) {
    std::vector<int> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    double total = 0.0;
    for (int id : sorted) total += inst.points[id].w;
    return total;
}

Instance transpose(const Instance& inst) {
    Instance t = inst;
    for (auto& p : t.points) std::swap(p.x, p.y);
    for (auto& s : t.segments) {
        std::swap(s.ax, s.ay);
        std::swap(s.bx, s.by);
        s.dir = Direction::canonical(s.dir.dy, s.dir.dx);
    }
    for (auto& d : t.directions) d = Direction::canonical(d.dy, d.dx);
    return t;
}

}  // namespace segstab
