"""16-joint skeleton convention shared by every dataset and model in the package."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ValidationError


@dataclass(frozen=True)
class Skeleton:
    """Joint naming, kinematic tree, lateral pairs, and body-part grouping.

    The root (pelvis) is joint 0 and is its own parent. ``left_right_pairs``
    lists (left_id, right_id) index pairs used by horizontal flipping.
    """

    joint_names: tuple[str, ...]
    parent_index: tuple[int, ...]
    left_right_pairs: tuple[tuple[int, int], ...]
    body_part_groups: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        n = len(self.joint_names)
        if n != 16:
            raise ValidationError(f"skeleton must have exactly 16 joints, got {n}")
        if len(self.parent_index) != n:
            raise ValidationError("parent_index length must match joint count")
        if self.parent_index[0] != 0:
            raise ValidationError("joint 0 (pelvis) must be the root (its own parent)")
        # Parent graph must be a tree rooted at 0: every joint reaches the root.
        for j in range(1, n):
            seen, k = set(), j
            while k != 0:
                if k in seen or not (0 <= self.parent_index[k] < n):
                    raise ValidationError(f"parent graph is not a tree at joint {j}")
                seen.add(k)
                k = self.parent_index[k]
        # Lateral pairs form an involution covering all paired joints.
        mapped: dict[int, int] = {}
        for left, right in self.left_right_pairs:
            if left == right or left in mapped or right in mapped:
                raise ValidationError("left_right_pairs must pair distinct joints once")
            mapped[left] = right
            mapped[right] = left
        # Every non-root joint belongs to exactly one body part group.
        if self.body_part_groups:
            assigned: dict[int, str] = {}
            for name, ids in self.body_part_groups.items():
                for j in ids:
                    if j == 0:
                        raise ValidationError("the root joint belongs to no body part")
                    if j in assigned:
                        raise ValidationError(
                            f"joint {j} in both {assigned[j]!r} and {name!r}"
                        )
                    assigned[j] = name
            if set(assigned) != set(range(1, n)):
                raise ValidationError("body_part_groups must cover all non-root joints")

    @property
    def n_joints(self) -> int:
        return len(self.joint_names)

    def flip_permutation(self) -> list[int]:
        """Joint permutation that swaps left/right channels."""
        perm = list(range(self.n_joints))
        for left, right in self.left_right_pairs:
            perm[left], perm[right] = right, left
        return perm

    def body_part(self, name: str) -> tuple[int, ...]:
        try:
            return self.body_part_groups[name]
        except KeyError:
            raise ValidationError(
                f"unknown body part {name!r}; known: {sorted(self.body_part_groups)}"
            ) from None

    def bones(self) -> list[tuple[int, int]]:
        """(child, parent) pairs, one per non-root joint."""
        return [(j, self.parent_index[j]) for j in range(1, self.n_joints)]


# Fixed joint order used across the package and recorded in dataset manifests:
# pelvis, right leg, left leg, torso/head, left arm, right arm.
DEFAULT_SKELETON = Skeleton(
    joint_names=(
        "pelvis",
        "r_hip",
        "r_knee",
        "r_ankle",
        "l_hip",
        "l_knee",
        "l_ankle",
        "spine",
        "neck",
        "head",
        "l_shoulder",
        "l_elbow",
        "l_wrist",
        "r_shoulder",
        "r_elbow",
        "r_wrist",
    ),
    parent_index=(0, 0, 1, 2, 0, 4, 5, 0, 7, 8, 8, 10, 11, 8, 13, 14),
    left_right_pairs=((4, 1), (5, 2), (6, 3), (10, 13), (11, 14), (12, 15)),
    body_part_groups={
        "left-leg": (4, 5, 6),
        "right-leg": (1, 2, 3),
        "left-arm": (10, 11, 12),
        "right-arm": (13, 14, 15),
        "torso-head": (7, 8, 9),
    },
)
