abstract class Abstract12 extends Abstract6 {
}
