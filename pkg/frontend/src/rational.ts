/**
 * Exact rationals over bigint, mirroring the service wire format ("p/q"
 * or plain integer strings).  The client never does geometry with these;
 * it only snaps drag coordinates to a rational grid and round-trips
 * values losslessly.
 */

export interface Rat {
  readonly num: bigint;
  readonly den: bigint; // always > 0
}

function gcd(a: bigint, b: bigint): bigint {
  a = a < 0n ? -a : a;
  b = b < 0n ? -b : b;
  while (b) {
    [a, b] = [b, a % b];
  }
  return a;
}

export function rat(num: bigint, den: bigint = 1n): Rat {
  if (den === 0n) throw new Error("zero denominator");
  if (den < 0n) {
    num = -num;
    den = -den;
  }
  const g = gcd(num, den) || 1n;
  return { num: num / g, den: den / g };
}

export function parseRational(text: string): Rat {
  const parts = text.trim().split("/");
  if (parts.length === 1) {
    if (!/^-?\d+$/.test(parts[0]!)) throw new Error(`bad rational ${text}`);
    return rat(BigInt(parts[0]!));
  }
  if (parts.length !== 2 || !/^-?\d+$/.test(parts[0]!) || !/^\d+$/.test(parts[1]!)) {
    throw new Error(`bad rational ${text}`);
  }
  return rat(BigInt(parts[0]!), BigInt(parts[1]!));
}

export function formatRational(r: Rat): string {
  return r.den === 1n ? r.num.toString() : `${r.num}/${r.den}`;
}

export function toNumber(r: Rat): number {
  return Number(r.num) / Number(r.den);
}

export function add(a: Rat, b: Rat): Rat {
  return rat(a.num * b.den + b.num * a.den, a.den * b.den);
}

/** Nearest grid point k/den to a floating screen coordinate. */
export function snapToGrid(value: number, den: bigint): Rat {
  const k = BigInt(Math.round(value * Number(den)));
  return rat(k, den);
}
