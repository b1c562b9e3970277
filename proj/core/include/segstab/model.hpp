#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace segstab {

/// A canonical rational direction in the plane: gcd(|dx|,|dy|) = 1 and
/// dx > 0, or dx = 0 and dy > 0. Axis directions are (1,0) and (0,1).
struct Direction {
    long long dx = 1;
    long long dy = 0;

    static Direction canonical(long long dx, long long dy);
    bool is_canonical() const;

    auto operator<=>(const Direction&) const = default;
};

inline const Direction kHorizontal = Direction{1, 0};
inline const Direction kVertical = Direction{0, 1};

struct PointRecord {
    int id = 0;
    long long x = 0;
    long long y = 0;
    double w = 1.0;

    bool operator==(const PointRecord&) const = default;
};

enum class SegmentKind { segment, full_line };

/// A segment (two endpoints) or a full line (anchor only) along `dir`.
/// For kind==segment, (ax,ay)-(bx,by) are the endpoints; for full_line,
/// (ax,ay) is an anchor on the line and (bx,by) is ignored.
struct SegmentRecord {
    int id = 0;
    SegmentKind kind = SegmentKind::segment;
    Direction dir;
    long long ax = 0, ay = 0;
    long long bx = 0, by = 0;

    bool operator==(const SegmentRecord&) const = default;
};

struct Instance {
    std::vector<PointRecord> points;
    std::vector<SegmentRecord> segments;
    std::vector<Direction> directions;
    // Optional union-objects: each entry is a group of segment ids forming
    // one object to hit. Empty means the instance has no objects.
    std::vector<std::vector<int>> objects;

    bool has_objects() const { return !objects.empty(); }
};

/// Identifies the full line a*x + b*y = c with gcd(a,b) = 1 and canonical
/// sign (a > 0, or a = 0 and b > 0). Two points share a LineKey for a
/// direction iff they are collinear along that direction.
struct LineKey {
    Direction dir;
    long long a = 0, b = 0, c = 0;

    auto operator<=>(const LineKey&) const = default;

    static LineKey through(long long px, long long py, Direction d);
    static LineKey of_segment(const SegmentRecord& s);
};

struct Violation {
    std::string code;
    std::string message;
};

/// Exact point-on-segment incidence: integer cross product plus bounding
/// box (full lines ignore the box). No floating point anywhere.
bool incidence(const PointRecord& p, const SegmentRecord& s);

/// All structural checks. Returns an empty list iff the instance is valid:
/// dense unique ids, unique coordinates, non-negative finite weights,
/// canonical declared directions, segment endpoints collinear with their
/// direction, every segment non-empty. Full lines are rejected unless
/// `allow_full_lines` is set (they belong to the lines variant only).
std::vector<Violation> validate(const Instance& inst, bool allow_full_lines = false);

/// Partition of all points into lines of direction `dir`; each line lists
/// its point ids ordered by (strictly increasing) projection onto `dir`.
std::map<LineKey, std::vector<int>> group_by_line(const Instance& inst, Direction dir);

/// Projection of a point onto a direction (exact, used for on-line order).
inline long long projection(const PointRecord& p, Direction d) {
    return d.dx * p.x + d.dy * p.y;
}

/// Independent feasibility certificate: does `selected` hit every segment?
bool hits_all(const Instance& inst, const std::vector<int>& selected);

/// Ids of segments not hit by `selected`.
std::vector<int> unhit_segments(const Instance& inst, const std::vector<int>& selected);

/// Total weight of a point-id set, summed in ascending id order so equal
/// sets always produce bit-identical totals.
double set_weight(const Instance& inst, const std::vector<int>& ids);

/// Swap the two coordinate axes (points, segment endpoints, directions).
Instance transpose(const Instance& inst);

long long gcd_ll(long long a, long long b);

}  // namespace segstab
