/* tslint:disable */
/* eslint-disable */

/**
 * `Cay(C_n, {±a : a ∈ jumps})` with its automorphism group order and
 * the multipliers fixing the connection set. `jumps` is comma-separated.
 */
export function circulant(n: number, jumps: string): string;

/**
 * The alternating-group pair for degree `n` and its `Aut(G, S)` at valency `k`.
 */
export function construct_alternating(n: number, k: number): string;

/**
 * Factorization of `r^m - 1` and its primitive prime divisors.
 */
export function ppd(r: number, m: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly circulant: (a: number, b: number, c: number) => [number, number];
    readonly construct_alternating: (a: number, b: number) => [number, number];
    readonly ppd: (a: number, b: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
