abstract class Abstract17 extends Abstract12 {
}
