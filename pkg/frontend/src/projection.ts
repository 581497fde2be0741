/**
 * Orthographic Bloch-sphere projection, matching the CLI renderer:
 * camera on the +x axis tilted 20 degrees up and 20 degrees toward +y,
 * z axis drawn vertically, screen y up.
 */

const AZIMUTH = (20 * Math.PI) / 180;
const ELEVATION = (20 * Math.PI) / 180;

const CAMERA = [
  Math.cos(ELEVATION) * Math.cos(AZIMUTH),
  Math.cos(ELEVATION) * Math.sin(AZIMUTH),
  Math.sin(ELEVATION),
];
const RIGHT = [-Math.sin(AZIMUTH), Math.cos(AZIMUTH), 0];
const UP = [
  -Math.sin(ELEVATION) * Math.cos(AZIMUTH),
  -Math.sin(ELEVATION) * Math.sin(AZIMUTH),
  Math.cos(ELEVATION),
];

export const EQUATOR_FLATTENING = Math.sin(ELEVATION);
export const POLE_OFFSET = Math.cos(ELEVATION);

export interface Projected {
  sx: number;
  sy: number;
  facing: boolean;
}

export function projectPoint(theta: number, phi: number): Projected {
  const p = [
    Math.sin(theta) * Math.cos(phi),
    Math.sin(theta) * Math.sin(phi),
    Math.cos(theta),
  ];
  const dot = (a: number[], b: number[]) => a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  return { sx: dot(p, RIGHT), sy: dot(p, UP), facing: dot(p, CAMERA) >= 0 };
}
