abstract class Abstract13 extends Abstract12 {
}
